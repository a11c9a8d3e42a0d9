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

#include "activita/shelling.h"

#include <algorithm>
#include <set>

#include "activita/error.h"

namespace activita {

namespace {

std::string Show(const ActivityTable& table, ElementSet s) {
  const std::string text = FormatSet(s, table.matroid().ground_size());
  return text.empty() ? "∅" : text;
}

// F(I) ∩ F(K) ⊆ F(J) ∩ F(K) = F(K) - z_c.
bool StarCondition(const Face& fi, const Face& fj, const Face& fk, int c) {
  const Face shared = fj & fk;
  const Face expected = fk.Without({Flavor::kZ, c});
  return fk.Contains({Flavor::kZ, c}) && shared == expected && (fi & fk).IsSubsetOf(shared);
}

}  // namespace

ShellingReport VerifyShelling(const SimplicialComplex& complex, const std::vector<int>& order) {
  const auto& facets = complex.facets();
  const int s = static_cast<int>(facets.size());
  std::vector<bool> seen(s, false);
  if (static_cast<int>(order.size()) != s) {
    throw Error(ErrorCode::kNotAPermutation, "order has wrong length");
  }
  for (int idx : order) {
    if (idx < 0 || idx >= s || seen[idx]) {
      throw Error(ErrorCode::kNotAPermutation, "order repeats or skips a facet");
    }
    seen[idx] = true;
  }
  for (const Facet& f : facets) {
    if (f.face.size() != complex.facet_size()) {
      throw Error(ErrorCode::kNotPure, "facets differ in size");
    }
  }

  ShellingReport report;
  for (int k = 0; k < s; ++k) {
    const Face& fk = facets[order[k]].face;
    Face restriction;
    for (int j = 0; j < k; ++j) {
      const Face missing = fk - facets[order[j]].face;
      if (missing.size() == 1) restriction = restriction | missing;
    }
    for (int i = 0; i < k; ++i) {
      if (restriction.IsSubsetOf(facets[order[i]].face)) {
        report.failing_pair = std::make_pair(i, k);
        return report;
      }
    }
    report.restrictions.push_back(restriction);
  }
  report.verdict = true;
  report.h.assign(complex.facet_size() + 1, 0);
  for (const Face& r : report.restrictions) ++report.h[r.size()];
  report.property_h = PropertyHCheck(complex, order, report.restrictions);
  report.h_complex = HComplexCheck(report.restrictions);
  return report;
}

bool PropertyHCheck(const SimplicialComplex& complex, const std::vector<int>& order,
                    const std::vector<Face>& restrictions) {
  const auto& facets = complex.facets();
  auto restriction_of = [&](const Face& g) -> std::optional<Face> {
    for (size_t i = 0; i < order.size(); ++i) {
      if (restrictions[i].IsSubsetOf(g) && g.IsSubsetOf(facets[order[i]].face)) {
        return restrictions[i];
      }
    }
    return std::nullopt;
  };
  for (size_t p = 0; p < order.size(); ++p) {
    const Face& f = facets[order[p]].face;
    for (Vertex v : f.Vertices()) {
      const Face g = f.Without(v);
      const Face needed = g & restrictions[p];
      if (needed.empty()) continue;
      const std::optional<Face> rg = restriction_of(g);
      if (!rg || !needed.IsSubsetOf(*rg)) return false;
    }
  }
  return true;
}

bool HComplexCheck(const std::vector<Face>& restrictions) {
  const std::set<Face> family(restrictions.begin(), restrictions.end());
  for (const Face& r : family) {
    for (Vertex v : r.Vertices()) {
      if (!family.contains(r.Without(v))) return false;
    }
  }
  return true;
}

std::vector<int> FacetOrderFromTags(const SimplicialComplex& complex,
                                    const std::vector<ElementSet>& tags) {
  std::vector<int> order;
  order.reserve(tags.size());
  for (ElementSet t : tags) {
    const int idx = complex.FacetIndexByTag(t);
    if (idx < 0) {
      throw Error(ErrorCode::kNotAPermutation,
                  "no facet tagged " + FormatSet(t, complex.ground_size()));
    }
    order.push_back(idx);
  }
  return order;
}

Face ExpectedRestriction(const ActivityTable& table, PosetKind kind, ElementSet independent) {
  if (kind == PosetKind::kFlipInd) {
    const int bi = table.RelatedBasisIndex(independent);
    const ElementSet basis = table.matroid().bases()[bi];
    return Face{ElementSet(), basis - independent, table.BasisProfile(bi).ip};
  }
  return Face{ElementSet(), ElementSet(), independent};
}

bool RestrictionFormulaCheck(const Matroid& m, PosetKind kind,
                             const std::vector<ElementSet>& order) {
  if (kind != PosetKind::kExtIntInd && kind != PosetKind::kFlipInd &&
      kind != PosetKind::kNbcExtInt) {
    throw Error(ErrorCode::kInvalidArgument,
                "restriction formulas need an order on "
                "independent or nbc sets");
  }
  const ActivityTable table(m);
  const Poset poset = BuildPoset(table, kind);
  LinearExtension ext;
  for (ElementSet s : order) {
    const int idx = poset.IndexOf(s);
    if (idx < 0) {
      throw Error(ErrorCode::kOrderNotExtension,
                  Show(table, s) + " is not an element of the poset");
    }
    ext.order.push_back(idx);
  }
  if (!IsLinearExtension(poset, ext)) {
    throw Error(ErrorCode::kOrderNotExtension, "order does not extend the poset");
  }
  const SimplicialComplex complex = BuildComplex(
      m, kind == PosetKind::kNbcExtInt ? ComplexKind::kAugmentedNbc : ComplexKind::kAugmentedEa);
  const ShellingReport report = VerifyShelling(complex, FacetOrderFromTags(complex, order));
  if (!report.verdict) return false;
  for (size_t p = 0; p < order.size(); ++p) {
    Face expected = ExpectedRestriction(table, kind, order[p]);
    if (report.restrictions[p] != expected) return false;
  }
  return true;
}

BasisExchange FindBasisExchange(const ActivityTable& table, int a_index, int c_index) {
  const Matroid& m = table.matroid();
  const ElementSet a = m.bases()[a_index];
  const ElementSet c_basis = m.bases()[c_index];
  if (CompareBases(table, BasisOrder::kExtInt, c_index, a_index)) {
    throw Error(ErrorCode::kComparablePair, Show(table, c_basis) + " <= " + Show(table, a));
  }
  const ActivityProfile& pa = table.BasisProfile(a_index);
  const ActivityProfile& pc = table.BasisProfile(c_index);
  const Face fa{a | pa.ep, ElementSet(), a | pa.ea};
  const Face fc{c_basis | pc.ep, ElementSet(), c_basis | pc.ea};

  const std::vector<int> candidates = (pc.ip & pa.ep).Elements();
  for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
    const int c = *it;
    for (int b : m.ground() - c_basis) {
      const ElementSet basis = c_basis.Without(c).With(b);
      if (!m.IsBasis(basis)) continue;
      const int bi = table.BasisIndex(basis);
      const ActivityProfile& pb = table.BasisProfile(bi);
      // (1) B < C.
      if (!CompareBases(table, BasisOrder::kExtInt, bi, c_index)) continue;
      // (3) c ∉ A, and c ∈ EA(B) iff c ∈ EA(A).
      if (a.Contains(c) || pb.ea.Contains(c) != pa.ea.Contains(c)) continue;
      // (4) activity agrees with C outside B ∪ C.
      const ElementSet outside = m.ground() - basis - c_basis;
      if ((pb.ea & outside) != (pc.ea & outside)) continue;
      // (5) c ∈ IP(C) ∩ EP(A) ∩ EP(B).
      if (!pb.ep.Contains(c)) continue;

      const Face fb{basis | pb.ep, ElementSet(), basis | pb.ea};
      if (!StarCondition(fa, fb, fc, c)) {
        throw Error(ErrorCode::kWitnessNotFound,
                    "exchange " + Show(table, basis) + " for A=" + Show(table, a) +
                        " C=" + Show(table, c_basis) +
                        " meets the exchange conditions but not the facet condition");
      }
      return {basis, c, b};
    }
  }
  throw Error(ErrorCode::kWitnessNotFound,
              "no exchange for A=" + Show(table, a) + " C=" + Show(table, c_basis));
}

Witness ShellingWitness(const Matroid& m, ElementSet i, ElementSet k) {
  return ShellingWitness(ActivityTable(m), i, k);
}

Witness ShellingWitness(const ActivityTable& table, ElementSet i, ElementSet k) {
  if (LeqExtIntInd(table, k, i)) {
    throw Error(ErrorCode::kComparablePair, Show(table, k) + " <= " + Show(table, i));
  }
  const Matroid& m = table.matroid();
  const int a_index = table.RelatedBasisIndex(i);
  const int c_index = table.RelatedBasisIndex(k);

  Witness w;
  if (a_index == c_index) {
    w.kind = WitnessCase::kRelated;
    w.c = (k - i).Min();
    w.j = k.Without(w.c);
  } else {
    w.kind = WitnessCase::kUnrelated;
    const BasisExchange ex = FindBasisExchange(table, a_index, c_index);
    const ElementSet c_basis = m.bases()[c_index];
    const ElementSet y = c_basis - k;
    const ActivityProfile& pb = table.BasisProfile(ex.basis);
    if (!table.BasisProfile(c_index).ia.IsSubsetOf(pb.ia)) {
      throw Error(ErrorCode::kWitnessNotFound,
                  "IA(" + Show(table, c_basis) + ") not inside IA(" + Show(table, ex.basis) + ")");
    }
    w.c = ex.c;
    w.b = ex.b;
    w.basis = ex.basis;
    w.j = ex.basis - y;
  }

  if (!LeqExtIntInd(table, w.j, k) || w.j == k) {
    throw Error(ErrorCode::kWitnessNotFound,
                "J=" + Show(table, w.j) + " does not precede K=" + Show(table, k));
  }
  const Face fi = FacetF(table, i).face;
  const Face fj = FacetF(table, w.j).face;
  const Face fk = FacetF(table, k).face;
  if (!StarCondition(fi, fj, fk, w.c)) {
    throw Error(ErrorCode::kWitnessNotFound,
                "facet condition fails for I=" + Show(table, i) + " K=" + Show(table, k));
  }
  return w;
}

ElementSet DescendingExchange(const ActivityTable& table, ElementSet a_basis, int a) {
  const ActivityProfile& pa = table.BasisProfile(a_basis);
  if (!pa.ip.Contains(a)) {
    throw Error(ErrorCode::kInvalidArgument,
                std::to_string(a) + " is not internally passive in " + Show(table, a_basis));
  }
  const Matroid& m = table.matroid();
  const ElementSet rest = a_basis.Without(a);
  for (int d = m.ground_size(); d >= 1; --d) {
    if (!rest.Contains(d) && m.IsBasis(rest.With(d))) return rest.With(d);
  }
  throw Error(ErrorCode::kNotABasis, "no exchange partner");  // unreachable: d = a works
}

}  // namespace activita
