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

#ifndef ACTIVITA_SHELLING_H_
#define ACTIVITA_SHELLING_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "activita/active_orders.h"
#include "activita/activity.h"
#include "activita/complexes.h"
#include "activita/matroid.h"

namespace activita {

// Result of checking a facet order of a pure complex.
struct ShellingReport {
  bool verdict = false;
  // Positions (i, k), i < k, in the order: no earlier facet meets F_k in a
  // codimension-one face avoiding F_i.
  std::optional<std::pair<int, int>> failing_pair;
  // restrictions[p] belongs to the facet at position p. Stops before the
  // failing position.
  std::vector<Face> restrictions;
  // h_i = number of restriction sets with i vertices (only when verdict).
  std::vector<int64_t> h;
  bool property_h = false;
  bool h_complex = false;
};

// `order` lists indices into complex.facets(). For every k, R_k is the set
// of vertices v of F_k such that F_k - v lies in an earlier facet; the order
// is a shelling iff no earlier facet contains R_k. Throws kNotAPermutation.
ShellingReport VerifyShelling(const SimplicialComplex& complex, const std::vector<int>& order);

// Checks the heredity condition on codimension-one faces: for every facet F
// at position p, every G = F - v and every vertex e of G in R_p, e lies in
// R(G), the restriction of the first facet whose interval [R_i, F_i]
// contains G.
bool PropertyHCheck(const SimplicialComplex& complex, const std::vector<int>& order,
                    const std::vector<Face>& restrictions);

// True iff every restriction set minus one vertex is again a restriction set.
bool HComplexCheck(const std::vector<Face>& restrictions);

// Maps an order of facet tags to facet indices. Throws kNotAPermutation.
std::vector<int> FacetOrderFromTags(const SimplicialComplex& complex,
                                    const std::vector<ElementSet>& tags);

// Closed form of the restriction set of the facet generated by `independent`
// in a shelling from a linear extension of the poset `kind`:
//   kExtIntInd: z_I; kFlipInd: y_{Y_I} z_{IP(A)}; kNbcExtInt: z_I.
Face ExpectedRestriction(const ActivityTable& table, PosetKind kind, ElementSet independent);

// `order` lists independent (or, for kNbcExtInt, nbc) sets. Throws
// kOrderNotExtension unless it extends the poset `kind`. True iff the facet
// order shells the augmented complex (kAugmentedNbc for kNbcExtInt,
// kAugmentedEa otherwise) and every restriction set matches
// ExpectedRestriction.
bool RestrictionFormulaCheck(const Matroid& m, PosetKind kind,
                             const std::vector<ElementSet>& order);

enum class WitnessCase { kRelated, kUnrelated };

// J and c with J < K and F(I) ∩ F(K) ⊆ F(J) ∩ F(K) = F(K) - z_c.
struct Witness {
  ElementSet j;
  int c = 0;
  WitnessCase kind = WitnessCase::kRelated;
  // Unrelated case only: B = C - c + b, J = B - Y.
  ElementSet basis;
  int b = 0;
};

// Basis exchange for bases C not <= A: B = C - c + b with B < C,
// c not in A, c ∈ IP(C) ∩ EP(A) ∩ EP(B), c ∈ EA(B) iff c ∈ EA(A), and
// d ∈ EA(B) iff d ∈ EA(C) for d outside B ∪ C. Candidates are tried with
// c descending, then b ascending. The result is checked to satisfy
// F(A) ∩ F(C) ⊆ F(B) ∩ F(C) = F(C) - z_c. Throws kComparablePair if C <= A,
// kWitnessNotFound if no exchange qualifies.
struct BasisExchange {
  ElementSet basis;
  int c = 0;
  int b = 0;
};
BasisExchange FindBasisExchange(const ActivityTable& table, int a_index, int c_index);

// Related I, K: c = min(K - I), J = K - c. Otherwise B from
// FindBasisExchange on the related bases and J = B - (C - K). Every
// conclusion is verified before returning, including IA(C) ⊆ IA(B).
// Throws kNotIndependent, kComparablePair if K <= I, kWitnessNotFound.
Witness ShellingWitness(const Matroid& m, ElementSet i, ElementSet k);
Witness ShellingWitness(const ActivityTable& table, ElementSet i, ElementSet k);

// For a basis A and a ∈ IP(A): D = A - a + d with d the largest element
// making D a basis. Throws kInvalidArgument if a is not internally passive.
ElementSet DescendingExchange(const ActivityTable& table, ElementSet a_basis, int a);

}  // namespace activita

#endif  // ACTIVITA_SHELLING_H_
