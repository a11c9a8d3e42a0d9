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

#include "activita/verification.h"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "activita/active_orders.h"
#include "activita/activity.h"
#include "activita/complexes.h"
#include "activita/error.h"
#include "activita/shelling.h"
#include "activita/tutte.h"

namespace activita {

namespace {

class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void Expect(bool condition, const std::string& what) {
  if (!condition) throw CheckFailure(what);
}

int64_t Evaluate(const BiPoly& p, int64_t q, int64_t t) {
  return p.Compose(BiPoly::Constant(q), BiPoly::Constant(t)).Coefficient(0, 0);
}

class Suite {
 public:
  Suite(std::string_view name, const Matroid& m, const VerifyOptions& options)
      : name_(name), m_(m), options_(options), table_(m), n_(m.ground_size()) {}

  std::vector<Finding> Run();

 private:
  void Check(const std::string& check, const std::function<std::string()>& body);

  std::string Show(ElementSet s) const {
    const std::string text = FormatSet(s, n_);
    return text.empty() ? "∅" : text;
  }
  bool SmallGround() const { return n_ <= options_.exhaustive_ground_limit; }

  // Runs `visit` on every extension drawn for `poset`; returns a summary.
  std::string Sweep(const Poset& poset,
                    const std::function<void(const std::vector<ElementSet>&)>& visit);

  std::string MatroidAxioms();
  std::string ActivityRoutes();
  std::string ActivityPartition();
  std::string CrapoSubsets();
  std::string CrapoIndependent();
  std::string RelatedActivities();
  std::string PosetAxioms();
  std::string OrderRefinement();
  std::string BooleanIntervals();
  std::string LatticeLaws();
  std::string FlipInvolutionCheck();
  std::string FaceCounts();
  std::string MainShelling();
  std::string FlipShelling();
  std::string EaShelling();
  std::string NbcShelling();
  std::string WitnessLemmas();
  std::string NbcWitnesses();
  std::string DescendingExchanges();
  std::string TutteIdentities();

  std::string name_;
  const Matroid& m_;
  VerifyOptions options_;
  ActivityTable table_;
  int n_;
  std::vector<Finding> findings_;
};

void Suite::Check(const std::string& check, const std::function<std::string()>& body) {
  Finding f{name_, check, false, ""};
  try {
    f.detail = body();
    f.pass = true;
  } catch (const CheckFailure& e) {
    f.detail = e.what();
  } catch (const Error& e) {
    f.detail = e.what();
  }
  findings_.push_back(std::move(f));
}

std::vector<Finding> Suite::Run() {
  Check("matroid-axioms", [&] { return MatroidAxioms(); });
  Check("activity-dual-vs-exchange", [&] { return ActivityRoutes(); });
  Check("activity-partition", [&] { return ActivityPartition(); });
  Check("crapo-partition-subsets", [&] { return CrapoSubsets(); });
  Check("crapo-partition-independent", [&] { return CrapoIndependent(); });
  Check("related-activities", [&] { return RelatedActivities(); });
  Check("poset-axioms", [&] { return PosetAxioms(); });
  Check("order-refinement", [&] { return OrderRefinement(); });
  Check("boolean-intervals", [&] { return BooleanIntervals(); });
  Check("lattice-laws", [&] { return LatticeLaws(); });
  Check("flip-involution", [&] { return FlipInvolutionCheck(); });
  Check("face-counts", [&] { return FaceCounts(); });
  Check("shelling-extint", [&] { return MainShelling(); });
  Check("shelling-flip", [&] { return FlipShelling(); });
  Check("shelling-ea", [&] { return EaShelling(); });
  Check("shelling-nbc", [&] { return NbcShelling(); });
  Check("witness-lemmas", [&] { return WitnessLemmas(); });
  Check("witness-nbc", [&] { return NbcWitnesses(); });
  Check("descending-exchange", [&] { return DescendingExchanges(); });
  Check("tutte-identities", [&] { return TutteIdentities(); });
  return std::move(findings_);
}

std::string Suite::Sweep(const Poset& poset,
                         const std::function<void(const std::vector<ElementSet>&)>& visit) {
  uint64_t count = 0;
  const bool exhaustive =
      ForEachLinearExtension(poset, options_.cap, options_.seed, [&](const LinearExtension& ext) {
        Expect(IsLinearExtension(poset, ext), "emitted order is not a linear extension");
        std::vector<ElementSet> sets;
        sets.reserve(ext.order.size());
        for (int idx : ext.order) sets.push_back(poset.element(idx));
        visit(sets);
        ++count;
      });
  return std::to_string(count) + (exhaustive ? " extensions (all)" : " extensions (sampled)");
}

std::string Suite::MatroidAxioms() {
  Expect(!FindExchangeViolation(m_.bases()).has_value(), "basis exchange fails");
  Expect(m_.Dual().Dual() == m_, "dual of the dual differs");
  for (ElementSet c : m_.Circuits()) {
    Expect(!m_.IsIndependent(c), "circuit " + Show(c) + " is independent");
    for (int e : c) {
      Expect(m_.IsIndependent(c.Without(e)), "circuit " + Show(c) + " is not minimal");
    }
  }
  for (ElementSet b : m_.bases()) {
    for (int e : m_.ground() - b) {
      const ElementSet circuit = m_.FundamentalCircuit(b, e);
      Expect(circuit.Contains(e) && circuit.IsSubsetOf(b.With(e)),
             "fundamental circuit of " + Show(b) + ", " + std::to_string(e));
    }
  }
  return std::to_string(m_.bases().size()) + " bases, " + std::to_string(m_.Circuits().size()) +
         " circuits";
}

std::string Suite::ActivityRoutes() {
  for (ElementSet b : m_.bases()) {
    const ActivityProfile dual = ComputeActivityProfile(m_, b);
    const ActivityProfile exchange = ExchangeActivityProfile(m_, b);
    Expect(dual.ea == exchange.ea && dual.ep == exchange.ep && dual.ia == exchange.ia &&
               dual.ip == exchange.ip,
           "routes disagree on basis " + Show(b));
  }
  return std::to_string(m_.bases().size()) + " bases";
}

std::string Suite::ActivityPartition() {
  if (n_ > 12) return "skipped (n > 12)";
  const ElementSet ground = m_.ground();
  for (ElementSet s : Subsets(ground)) {
    const ActivityProfile p = ComputeActivityProfile(m_, s);
    Expect((p.ea | p.ep) == ground - s && !p.ea.Intersects(p.ep),
           "external activity does not partition the complement of " + Show(s));
    Expect((p.ia | p.ip) == s && !p.ia.Intersects(p.ip),
           "internal activity does not partition " + Show(s));
  }
  return std::to_string(uint64_t{1} << n_) + " subsets";
}

std::string Suite::CrapoSubsets() {
  if (n_ > 12) return "skipped (n > 12)";
  std::map<int, int> hits;
  for (ElementSet s : Subsets(m_.ground())) {
    const CrapoDecomposition d = DecomposeSubset(m_, s);
    const ActivityProfile& p = table_.BasisProfile(d.basis);
    Expect(d.y.IsSubsetOf(p.ia) && d.x.IsSubsetOf(p.ea) && ((d.basis - d.y) | d.x) == s,
           "bad decomposition of " + Show(s));
    ++hits[table_.BasisIndex(d.basis)];
  }
  uint64_t total = 0;
  for (size_t i = 0; i < m_.bases().size(); ++i) {
    const ActivityProfile& p = table_.BasisProfile(static_cast<int>(i));
    const int expected = 1 << (p.ia.size() + p.ea.size());
    Expect(hits[static_cast<int>(i)] == expected,
           "interval of " + Show(m_.bases()[i]) + " has the wrong size");
    total += expected;
  }
  Expect(total == (uint64_t{1} << n_), "intervals do not cover 2^E");
  return std::to_string(m_.bases().size()) + " intervals cover 2^E";
}

std::string Suite::CrapoIndependent() {
  const auto& independent = table_.independent_sets();
  uint64_t total = 0;
  for (ElementSet i : independent) {
    const CrapoDecomposition d = DecomposeIndependent(m_, i);
    Expect(d.x.empty() && d.basis == table_.RelatedBasis(i) &&
               d.y.IsSubsetOf(table_.BasisProfile(d.basis).ia) && d.basis - d.y == i,
           "bad decomposition of independent set " + Show(i));
  }
  for (size_t b = 0; b < m_.bases().size(); ++b) {
    total += uint64_t{1} << table_.BasisProfile(static_cast<int>(b)).ia.size();
  }
  Expect(total == independent.size(), "blocks do not partition the independent sets");
  return std::to_string(independent.size()) + " independent sets";
}

std::string Suite::RelatedActivities() {
  for (ElementSet i : table_.independent_sets()) {
    const ActivityProfile pi = ComputeActivityProfile(m_, i);
    const ActivityProfile& pb = table_.BasisProfile(table_.RelatedBasisIndex(i));
    const ElementSet b = table_.RelatedBasis(i);
    Expect(pi.ea == pb.ea, "EA(" + Show(i) + ") differs from its related basis");
    Expect(pi.ip == pb.ip, "IP(" + Show(i) + ") differs from its related basis");
    Expect(((i - pi.ia) | pi.ea) == ((b - pb.ia) | pb.ea),
           "I - IA(I) + EA(I) differs from its related basis at " + Show(i));
    Expect((i | pi.ep) == (b | pb.ep), "I + EP(I) differs from its related basis at " + Show(i));
  }
  return std::to_string(table_.independent_sets().size()) + " independent sets";
}

std::string Suite::PosetAxioms() {
  for (PosetKind kind : {PosetKind::kExtBases, PosetKind::kIntBases, PosetKind::kExtIntBases,
                         PosetKind::kExtIntInd, PosetKind::kFlipInd, PosetKind::kNbcExtInt}) {
    const Poset p = BuildPoset(table_, kind);
    Expect(p.IsPartialOrder(), std::string(PosetKindName(kind)) + " is not a partial order");
    for (const auto& [a, b] : p.covers()) {
      Expect(p.Less(a, b), std::string(PosetKindName(kind)) + " cover is not strict");
    }
  }
  return "6 posets";
}

std::string Suite::OrderRefinement() {
  const int nb = static_cast<int>(m_.bases().size());
  for (int a = 0; a < nb; ++a) {
    for (int b = 0; b < nb; ++b) {
      const bool extint = CompareBases(table_, BasisOrder::kExtInt, a, b);
      if (CompareBases(table_, BasisOrder::kExternal, a, b) ||
          CompareBases(table_, BasisOrder::kInternal, a, b)) {
        Expect(extint, "ext/int does not refine ext and int at " + Show(m_.bases()[a]) + ", " +
                           Show(m_.bases()[b]));
      }
      Expect(LeqExtIntInd(table_, m_.bases()[a], m_.bases()[b]) == extint,
             "independent-set order disagrees with the bases order");
    }
  }
  const auto& independent = table_.independent_sets();
  for (ElementSet i : independent) {
    for (ElementSet k : independent) {
      const bool leq = LeqExtIntInd(table_, i, k);
      Expect(LeqExtIntInd(m_, i, k) == leq,
             "definition and related-basis route disagree at " + Show(i) + ", " + Show(k));
      const bool same_block = table_.RelatedBasisIndex(i) == table_.RelatedBasisIndex(k);
      const bool flip = LeqFlipInd(table_, i, k);
      Expect(flip == (same_block ? k.IsSubsetOf(i) : leq),
             "flipped order wrong at " + Show(i) + ", " + Show(k));
      Expect(LeqFlipInd(m_, i, k) == flip, "flipped order routes disagree");
    }
  }
  return std::to_string(nb * nb) + " basis pairs, " +
         std::to_string(independent.size() * independent.size()) + " independent pairs";
}

std::string Suite::BooleanIntervals() {
  const Poset bases = BuildPoset(table_, PosetKind::kExtIntBases);
  for (const auto& [lo, hi] : bases.covers()) {
    const ElementSet b = bases.element(lo);
    const ElementSet c = bases.element(hi);
    const std::vector<ElementSet> interval = BooleanInterval(m_, b, c);
    Expect(interval.size() == (size_t{1} << table_.BasisProfile(c).ia.size()),
           "interval (" + Show(b) + ", " + Show(c) + "] is not boolean");
  }
  return std::to_string(bases.covers().size()) + " covers";
}

std::string Suite::LatticeLaws() {
  if (!SmallGround())
    return "skipped (n > " + std::to_string(options_.exhaustive_ground_limit) + ")";
  const Poset bases = BuildPoset(table_, PosetKind::kExtIntBases);
  const Poset ind = BuildPoset(table_, PosetKind::kExtIntInd);
  const int s = ind.size();
  std::vector<int> meet(s * s), join(s * s);
  for (int i = 0; i < s; ++i) {
    for (int k = 0; k < s; ++k) {
      const MeetJoin mj = MeetJoinInd(table_, bases, ind.element(i), ind.element(k));
      meet[i * s + k] = ind.IndexOf(mj.meet);
      join[i * s + k] = ind.IndexOf(mj.join);
      const int mi = meet[i * s + k], ji = join[i * s + k];
      Expect(mi >= 0 && ji >= 0, "meet/join is not an independent set");
      // Greatest lower bound and least upper bound, checked against the poset.
      Expect(
          ind.Leq(mi, i) && ind.Leq(mi, k) && ind.Leq(i, ji) && ind.Leq(k, ji),
          "meet/join of " + Show(ind.element(i)) + ", " + Show(ind.element(k)) + " is not a bound");
      for (int z = 0; z < s; ++z) {
        if (ind.Leq(z, i) && ind.Leq(z, k)) Expect(ind.Leq(z, mi), "meet is not greatest");
        if (ind.Leq(i, z) && ind.Leq(k, z)) Expect(ind.Leq(ji, z), "join is not least");
      }
    }
  }
  auto m = [&](int a, int b) { return meet[a * s + b]; };
  auto j = [&](int a, int b) { return join[a * s + b]; };
  for (int a = 0; a < s; ++a) {
    Expect(m(a, a) == a && j(a, a) == a, "idempotence fails");
    for (int b = 0; b < s; ++b) {
      Expect(m(a, b) == m(b, a) && j(a, b) == j(b, a), "commutativity fails");
      Expect(m(a, j(a, b)) == a && j(a, m(a, b)) == a, "absorption fails");
      for (int c = 0; c < s; ++c) {
        Expect(m(m(a, b), c) == m(a, m(b, c)) && j(j(a, b), c) == j(a, j(b, c)),
               "associativity fails");
      }
    }
  }
  return std::to_string(s) + " elements, all triples";
}

std::string Suite::FlipInvolutionCheck() {
  const auto& independent = table_.independent_sets();
  std::map<int, int64_t> lhs, rhs;
  std::vector<ElementSet> images;
  for (ElementSet i : independent) {
    const ElementSet image = FlipInvolution(table_, i);
    Expect(FlipInvolution(table_, image) == i, "flip of " + Show(i) + " is not an involution");
    Expect(table_.RelatedBasisIndex(image) == table_.RelatedBasisIndex(i),
           "flip leaves the block of " + Show(i));
    images.push_back(image);
    const ActivityProfile& p = table_.BasisProfile(table_.RelatedBasisIndex(i));
    ++lhs[i.size()];
    ++rhs[(p.ia - table_.DeletedActive(i)).size() + p.ip.size()];
  }
  std::sort(images.begin(), images.end());
  Expect(images == independent, "flip is not a bijection");
  Expect(lhs == rhs, "generating functions differ");
  return std::to_string(independent.size()) + " independent sets";
}

std::string Suite::FaceCounts() {
  std::ostringstream out;
  for (ComplexKind kind : {ComplexKind::kAugmentedEa, ComplexKind::kEa, ComplexKind::kNbc,
                           ComplexKind::kAugmentedNbc}) {
    const SimplicialComplex complex = BuildComplex(m_, kind);
    const std::vector<int64_t> f = FVector(complex);
    if (complex.facets().size() <= 20) {
      Expect(f == FVectorInclusionExclusion(complex),
             std::string(ComplexKindName(kind)) + ": f-vector routes disagree");
    }
    out << ComplexKindName(kind) << ": " << complex.facets().size() << " facets; ";
  }
  // The nbc sets are exactly the independent sets without external activity.
  const std::vector<ElementSet> nbc = NbcSets(m_);
  std::vector<ElementSet> inactive;
  for (ElementSet i : table_.independent_sets()) {
    if (ExternallyActive(m_, i).empty()) inactive.push_back(i);
  }
  Expect(nbc == inactive, "nbc sets differ from independent sets with EA = ∅");
  out << nbc.size() << " nbc sets";
  return out.str();
}

std::string Suite::MainShelling() {
  const SimplicialComplex complex = BuildComplex(m_, ComplexKind::kAugmentedEa);
  const std::vector<int64_t> h = ComputeFHVector(complex).h;
  const Poset poset = BuildPoset(table_, PosetKind::kExtIntInd);
  const auto& independent = table_.independent_sets();

  // Witness for every pair I, K with K not <= I, used as a fast path that
  // must agree with the generic verifier.
  std::map<std::pair<ElementSet, ElementSet>, ElementSet> witness;
  for (ElementSet i : independent) {
    for (ElementSet k : independent) {
      if (!LeqExtIntInd(table_, k, i)) witness[{i, k}] = ShellingWitness(table_, i, k).j;
    }
  }

  const std::string summary = Sweep(poset, [&](const std::vector<ElementSet>& order) {
    const ShellingReport report = VerifyShelling(complex, FacetOrderFromTags(complex, order));
    bool fast = true;
    std::map<ElementSet, size_t> position;
    for (size_t p = 0; p < order.size(); ++p) position[order[p]] = p;
    for (size_t k = 0; k < order.size() && fast; ++k) {
      for (size_t i = 0; i < k; ++i) {
        if (position[witness.at({order[i], order[k]})] >= k) {
          fast = false;
          break;
        }
      }
    }
    Expect(fast == report.verdict, "witness fast path disagrees with the generic verifier");
    Expect(report.verdict, "not a shelling; failing pair at positions " +
                               std::to_string(report.failing_pair->first) + ", " +
                               std::to_string(report.failing_pair->second));
    for (size_t p = 0; p < order.size(); ++p) {
      Expect(report.restrictions[p] == ExpectedRestriction(table_, PosetKind::kExtIntInd, order[p]),
             "R(F(" + Show(order[p]) + ")) is not z_I");
    }
    Expect(report.h == h, "restriction counts differ from the h-vector");
    Expect(report.property_h, "property (H) fails");
    Expect(report.h_complex, "restriction sets do not form a complex");
  });
  return summary + ", " + std::to_string(witness.size()) + " witnesses";
}

std::string Suite::FlipShelling() {
  const SimplicialComplex complex = BuildComplex(m_, ComplexKind::kAugmentedEa);
  const std::vector<int64_t> h = ComputeFHVector(complex).h;
  const Poset poset = BuildPoset(table_, PosetKind::kFlipInd);
  const int r = m_.rank();
  const BiPoly q = BiPoly::Q(), t = BiPoly::T(), one = BiPoly::Constant(1);
  const BiPoly expected =
      q.Pow(r) * t.Pow(n_) *
      TutteByActivities(m_).Compose((BiPoly::Monomial(1, -1, 0) + one) * t, one);
  return Sweep(poset, [&](const std::vector<ElementSet>& order) {
    const ShellingReport report = VerifyShelling(complex, FacetOrderFromTags(complex, order));
    Expect(report.verdict, "flipped order does not shell the augmented complex");
    BiPoly bivariate;
    for (size_t p = 0; p < order.size(); ++p) {
      const Face& rest = report.restrictions[p];
      Expect(rest == ExpectedRestriction(table_, PosetKind::kFlipInd, order[p]),
             "R(F(" + Show(order[p]) + ")) is not y_Y z_IP");
      bivariate += BiPoly::Monomial(1, -rest.y.size(), n_ + r - rest.z.size());
    }
    Expect(report.h == h, "restriction counts differ from the h-vector");
    Expect(q.Pow(r) * bivariate == expected, "bivariate polynomial differs");
  });
}

std::string Suite::EaShelling() {
  const SimplicialComplex complex = BuildComplex(m_, ComplexKind::kEa);
  const Poset poset = BuildPoset(table_, PosetKind::kExtIntBases);
  const std::string summary = Sweep(poset, [&](const std::vector<ElementSet>& order) {
    const ShellingReport report = VerifyShelling(complex, FacetOrderFromTags(complex, order));
    Expect(report.verdict, "external activity complex not shelled");
  });
  // Basis exchange, facet condition included, for every pair C not <= A.
  const int nb = static_cast<int>(m_.bases().size());
  int pairs = 0;
  for (int a = 0; a < nb; ++a) {
    for (int c = 0; c < nb; ++c) {
      if (CompareBases(table_, BasisOrder::kExtInt, c, a)) continue;
      FindBasisExchange(table_, a, c);
      ++pairs;
    }
  }
  return summary + ", " + std::to_string(pairs) + " exchanges";
}

std::string Suite::NbcShelling() {
  const SimplicialComplex complex = BuildComplex(m_, ComplexKind::kAugmentedNbc);
  if (complex.facets().empty()) {
    // A loop breaks the empty circuit-minus-max, so there are no nbc sets.
    Expect(NbcSets(m_).empty(), "void complex but nbc sets exist");
    return "void complex (M has a loop)";
  }
  const FHVector fh = ComputeFHVector(complex);
  const Poset poset = BuildPoset(table_, PosetKind::kNbcExtInt);
  std::vector<int64_t> nbc_f(m_.rank() + 1, 0);
  for (ElementSet s : NbcSets(m_)) ++nbc_f[s.size()];
  Expect(fh.h == nbc_f, "h-vector differs from the f-vector of NBC(M)");
  return Sweep(poset, [&](const std::vector<ElementSet>& order) {
    const ShellingReport report = VerifyShelling(complex, FacetOrderFromTags(complex, order));
    Expect(report.verdict, "augmented nbc complex not shelled");
    for (size_t p = 0; p < order.size(); ++p) {
      Expect(report.restrictions[p] == ExpectedRestriction(table_, PosetKind::kNbcExtInt, order[p]),
             "R(G(" + Show(order[p]) + ")) is not z_I");
    }
    Expect(report.property_h, "property (H) fails");
    Expect(report.h_complex, "restriction sets do not form a complex");
  });
}

std::string Suite::WitnessLemmas() {
  const auto& independent = table_.independent_sets();
  int related = 0, unrelated = 0;
  for (ElementSet i : independent) {
    for (ElementSet k : independent) {
      if (LeqExtIntInd(table_, k, i)) continue;
      const Witness w = ShellingWitness(table_, i, k);
      (w.kind == WitnessCase::kRelated ? related : unrelated)++;
    }
  }
  return std::to_string(related) + " related, " + std::to_string(unrelated) + " unrelated";
}

std::string Suite::NbcWitnesses() {
  const std::vector<ElementSet> nbc = NbcSets(m_);
  int pairs = 0;
  for (ElementSet i : nbc) {
    for (ElementSet k : nbc) {
      if (LeqExtIntInd(table_, k, i)) continue;
      const Witness w = ShellingWitness(table_, i, k);
      Expect(IsNbc(m_, w.j),
             "witness " + Show(w.j) + " for (" + Show(i) + ", " + Show(k) + ") is not nbc");
      const Face gi = FacetG(m_, i).face, gj = FacetG(m_, w.j).face, gk = FacetG(m_, k).face;
      const Face expected = gk.Without({Flavor::kZ, w.c});
      Expect(
          gk.Contains({Flavor::kZ, w.c}) && (gj & gk) == expected && (gi & gk).IsSubsetOf(expected),
          "nbc facet condition fails for (" + Show(i) + ", " + Show(k) + ")");
      ++pairs;
    }
  }
  return std::to_string(pairs) + " pairs";
}

std::string Suite::DescendingExchanges() {
  int count = 0;
  for (size_t ai = 0; ai < m_.bases().size(); ++ai) {
    const ElementSet a = m_.bases()[ai];
    const ActivityProfile& pa = table_.BasisProfile(static_cast<int>(ai));
    for (int e : pa.ip) {
      const ElementSet d = DescendingExchange(table_, a, e);
      const int di = table_.BasisIndex(d);
      Expect(d != a && CompareBases(table_, BasisOrder::kExtInt, di, static_cast<int>(ai)),
             "D is not below " + Show(a));
      Expect(pa.ia.IsSubsetOf(table_.BasisProfile(di).ia),
             "IA(" + Show(a) + ") not inside IA(" + Show(d) + ")");
      ++count;
    }
  }
  return std::to_string(count) + " pairs (A, a)";
}

std::string Suite::TutteIdentities() {
  const IdentityReport report = ComputeIdentityReport(m_, options_.seed);
  for (const IdentityCheck& c : report.checks) {
    Expect(c.holds, c.name + ": " + c.lhs.ToString() + " vs " + c.rhs.ToString());
  }
  const BiPoly& tutte = report.tutte;
  Expect(tutte == TutteByDeletionContraction(m_), "activities and deletion-contraction differ");
  Expect(TutteByActivities(m_.Dual()) == tutte.Swapped(), "dual does not swap q and t");
  Expect(Evaluate(tutte, 1, 1) == static_cast<int64_t>(m_.bases().size()), "T(1,1) != #bases");
  Expect(Evaluate(tutte, 2, 1) == static_cast<int64_t>(table_.independent_sets().size()),
         "T(2,1) != #independent sets");
  Expect(Evaluate(tutte, 2, 0) == static_cast<int64_t>(NbcSets(m_).size()), "T(2,0) != #nbc sets");
  return "T = " + tutte.ToString();
}

}  // namespace

std::vector<Finding> VerifyMatroid(std::string_view name, const Matroid& m,
                                   const VerifyOptions& options) {
  return Suite(name, m, options).Run();
}

bool AllPass(const std::vector<Finding>& findings) {
  return std::all_of(findings.begin(), findings.end(), [](const Finding& f) { return f.pass; });
}

}  // namespace activita
