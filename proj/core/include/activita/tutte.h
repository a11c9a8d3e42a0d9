// Copyright 2026 The Activita Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ACTIVITA_TUTTE_H_
#define ACTIVITA_TUTTE_H_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "activita/matroid.h"

namespace activita {

// Sparse Laurent polynomial in q and t with integer coefficients. Zero
// coefficients are never stored.
class BiPoly {
 public:
  using Exponents = std::pair<int, int>;  // (q, t)

  BiPoly() = default;
  static BiPoly Monomial(int64_t coefficient, int q_exp, int t_exp);
  static BiPoly Constant(int64_t c) { return Monomial(c, 0, 0); }
  static BiPoly Q() { return Monomial(1, 1, 0); }
  static BiPoly T() { return Monomial(1, 0, 1); }

  int64_t Coefficient(int q_exp, int t_exp) const;
  const std::map<Exponents, int64_t>& terms() const { return terms_; }
  bool IsZero() const { return terms_.empty(); }
  int MinQExponent() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly operator+(const BiPoly& o) const { return BiPoly(*this) += o; }
  BiPoly operator-(const BiPoly& o) const { return BiPoly(*this) -= o; }
  BiPoly operator*(const BiPoly& o) const;
  BiPoly Pow(int exponent) const;

  // Substitutes q -> q_image, t -> t_image. Requires nonnegative exponents.
  BiPoly Compose(const BiPoly& q_image, const BiPoly& t_image) const;
  // Swaps the roles of q and t.
  BiPoly Swapped() const;
  // t -> q.
  BiPoly SetTEqualQ() const;

  bool operator==(const BiPoly&) const = default;

  // Monomials by decreasing q then t exponent, e.g. "q^3 + 2q^2 + 2qt + t^2".
  std::string ToString() const;

 private:
  void AddTerm(Exponents e, int64_t c);

  std::map<Exponents, int64_t> terms_;
};

// Univariate polynomial sum_i coeffs[i] q^{degree - i}.
BiPoly PolyFromDescending(const std::vector<int64_t>& coeffs, int degree);

// sum over bases of q^{|IA(B)|} t^{|EA(B)|}.
BiPoly TutteByActivities(const Matroid& m);
// Delete/contract the largest element, memoized on (ground, bases).
BiPoly TutteByDeletionContraction(const Matroid& m);

struct IdentityCheck {
  std::string name;
  bool holds = false;
  BiPoly lhs;
  BiPoly rhs;
};

struct IdentityReport {
  BiPoly tutte;
  std::vector<IdentityCheck> checks;

  bool AllHold() const;
};

// Evaluates, as exact polynomial identities:
//   h-polynomial of the augmented external activity complex = q^n T(1+q, 1);
//   h-polynomial of the augmented nbc complex = T(1+q, 0);
//   q^r times the bivariate restriction polynomial of a flipped-order
//     shelling (extension drawn from `seed`) = q^r t^n T((1/q+1)t, 1);
//   that bivariate polynomial at t = q equals the first h-polynomial.
IdentityReport ComputeIdentityReport(const Matroid& m, uint64_t seed = 0);

}  // namespace activita

#endif  // ACTIVITA_TUTTE_H_
