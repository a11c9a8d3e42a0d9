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

#include "activita/tutte.h"

#include <algorithm>
#include <sstream>

#include "activita/active_orders.h"
#include "activita/activity.h"
#include "activita/complexes.h"
#include "activita/error.h"
#include "activita/shelling.h"

namespace activita {

BiPoly BiPoly::Monomial(int64_t coefficient, int q_exp, int t_exp) {
  BiPoly p;
  p.AddTerm({q_exp, t_exp}, coefficient);
  return p;
}

void BiPoly::AddTerm(Exponents e, int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int64_t BiPoly::Coefficient(int q_exp, int t_exp) const {
  auto it = terms_.find({q_exp, t_exp});
  return it == terms_.end() ? 0 : it->second;
}

int BiPoly::MinQExponent() const {
  int lo = 0;
  for (const auto& [e, c] : terms_) lo = std::min(lo, e.first);
  return lo;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) AddTerm(e, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) AddTerm(e, -c);
  return *this;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      out.AddTerm({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
    }
  }
  return out;
}

BiPoly BiPoly::Pow(int exponent) const {
  if (exponent < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative power of a polynomial");
  }
  BiPoly result = Constant(1);
  for (int i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

BiPoly BiPoly::Compose(const BiPoly& q_image, const BiPoly& t_image) const {
  BiPoly out;
  for (const auto& [e, c] : terms_) {
    out += Constant(c) * q_image.Pow(e.first) * t_image.Pow(e.second);
  }
  return out;
}

BiPoly BiPoly::Swapped() const {
  BiPoly out;
  for (const auto& [e, c] : terms_) out.AddTerm({e.second, e.first}, c);
  return out;
}

BiPoly BiPoly::SetTEqualQ() const {
  BiPoly out;
  for (const auto& [e, c] : terms_) out.AddTerm({e.first + e.second, 0}, c);
  return out;
}

std::string BiPoly::ToString() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [q, t] = it->first;
    int64_t c = it->second;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    c = c < 0 ? -c : c;
    const bool constant = q == 0 && t == 0;
    if (c != 1 || constant) out << c;
    auto power = [&](const char* var, int e) {
      if (e == 0) return;
      out << var;
      if (e != 1) out << "^" << e;
    };
    power("q", q);
    power("t", t);
  }
  return out.str();
}

BiPoly PolyFromDescending(const std::vector<int64_t>& coeffs, int degree) {
  BiPoly p;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    p += BiPoly::Monomial(coeffs[i], degree - static_cast<int>(i), 0);
  }
  return p;
}

BiPoly TutteByActivities(const Matroid& m) {
  BiPoly out;
  for (ElementSet b : m.bases()) {
    const ActivityProfile p = ComputeActivityProfile(m, b);
    out += BiPoly::Monomial(1, p.ia.size(), p.ea.size());
  }
  return out;
}

namespace {

class DeletionContraction {
 public:
  BiPoly Evaluate(ElementSet ground, std::vector<ElementSet> bases) {
    if (ground.empty()) return BiPoly::Constant(1);
    std::vector<uint64_t> key{ground.mask()};
    for (ElementSet b : bases) key.push_back(b.mask());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int e = ground.Max();
    const ElementSet rest = ground.Without(e);
    std::vector<ElementSet> without, with;
    for (ElementSet b : bases) {
      if (b.Contains(e)) {
        with.push_back(b.Without(e));
      } else {
        without.push_back(b);
      }
    }
    BiPoly result;
    if (with.empty()) {
      result = BiPoly::T() * Evaluate(rest, std::move(without));  // loop
    } else if (without.empty()) {
      std::sort(with.begin(), with.end());
      result = BiPoly::Q() * Evaluate(rest, std::move(with));  // coloop
    } else {
      std::sort(with.begin(), with.end());
      result = Evaluate(rest, std::move(without)) + Evaluate(rest, std::move(with));
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  std::map<std::vector<uint64_t>, BiPoly> memo_;
};

}  // namespace

BiPoly TutteByDeletionContraction(const Matroid& m) {
  DeletionContraction dc;
  return dc.Evaluate(m.ground(), {m.bases().begin(), m.bases().end()});
}

bool IdentityReport::AllHold() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.holds; });
}

IdentityReport ComputeIdentityReport(const Matroid& m, uint64_t seed) {
  const int n = m.ground_size();
  const int r = m.rank();
  IdentityReport report;
  report.tutte = TutteByActivities(m);
  const BiPoly& tutte = report.tutte;
  const BiPoly q = BiPoly::Q();
  const BiPoly t = BiPoly::T();
  const BiPoly one = BiPoly::Constant(1);
  auto add = [&](std::string name, BiPoly lhs, BiPoly rhs) {
    const bool holds = lhs == rhs;
    report.checks.push_back({std::move(name), holds, std::move(lhs), std::move(rhs)});
  };

  const SimplicialComplex augmented = BuildComplex(m, ComplexKind::kAugmentedEa);
  const BiPoly h_augmented =
      PolyFromDescending(ComputeFHVector(augmented).h, augmented.facet_size());
  add("h(augmented-ea) = q^n T(1+q,1)", h_augmented, q.Pow(n) * tutte.Compose(one + q, one));

  const SimplicialComplex nbc = BuildComplex(m, ComplexKind::kAugmentedNbc);
  const BiPoly h_nbc = PolyFromDescending(ComputeFHVector(nbc).h, nbc.facet_size());
  add("h(augmented-nbc) = T(1+q,0)", h_nbc, tutte.Compose(one + q, BiPoly()));

  const ActivityTable table(m);
  const Poset flipped = BuildPoset(table, PosetKind::kFlipInd);
  const LinearExtension ext = RandomLinearExtension(flipped, seed);
  std::vector<ElementSet> order;
  for (int idx : ext.order) order.push_back(flipped.element(idx));
  const ShellingReport shelling = VerifyShelling(augmented, FacetOrderFromTags(augmented, order));
  BiPoly bivariate;
  if (shelling.verdict) {
    for (const Face& rest : shelling.restrictions) {
      bivariate += BiPoly::Monomial(1, -rest.y.size(), n + r - rest.z.size());
    }
  }
  // (1/q + 1) t, kept Laurent; both sides are multiplied by q^r.
  const BiPoly q_image = (BiPoly::Monomial(1, -1, 0) + one) * t;
  add("q^r bivariate = q^r t^n T((1/q+1)t,1)", q.Pow(r) * bivariate,
      q.Pow(r) * t.Pow(n) * tutte.Compose(q_image, one));
  add("bivariate at t=q = h(augmented-ea)", bivariate.SetTEqualQ(), h_augmented);
  return report;
}

}  // namespace activita
