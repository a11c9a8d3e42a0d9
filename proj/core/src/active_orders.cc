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

#include "activita/active_orders.h"

#include <algorithm>
#include <random>
#include <sstream>

#include "activita/error.h"

namespace activita {

namespace {

// All forms of the three definitions, evaluated from basis profiles.
bool CompareProfiles(BasisOrder order, ElementSet a, const ActivityProfile& pa, ElementSet b,
                     const ActivityProfile& pb, int n) {
  std::vector<bool> forms;
  switch (order) {
    case BasisOrder::kExternal:
      forms = {a.IsSubsetOf(b | pb.ea), (a | pa.ea).IsSubsetOf(b | pb.ea)};
      break;
    case BasisOrder::kInternal:
      forms = {(a - pa.ia).IsSubsetOf(b), (a - pa.ia).IsSubsetOf(b - pb.ia)};
      break;
    case BasisOrder::kExtInt:
      forms = {!pa.ip.Intersects(pb.ep), ((a - pa.ia) | pa.ea).IsSubsetOf((b - pb.ia) | pb.ea),
               (pa.ip | pa.ea).IsSubsetOf(pb.ip | pb.ea)};
      break;
  }
  for (bool f : forms) {
    if (f != forms.front()) {
      throw Error(ErrorCode::kEquivalenceMismatch,
                  "equivalent forms disagree on " + FormatSet(a, n) + " <= " + FormatSet(b, n));
    }
  }
  return forms.front();
}

std::vector<ElementSet> PosetElements(const ActivityTable& table, PosetKind kind) {
  const Matroid& m = table.matroid();
  switch (kind) {
    case PosetKind::kExtBases:
    case PosetKind::kIntBases:
    case PosetKind::kExtIntBases:
      return {m.bases().begin(), m.bases().end()};
    case PosetKind::kExtIntInd:
    case PosetKind::kFlipInd:
      return table.independent_sets();
    case PosetKind::kNbcExtInt: {
      std::vector<ElementSet> out;
      for (ElementSet s : table.independent_sets()) {
        if (table.BasisProfile(table.RelatedBasisIndex(s)).ea.empty()) {
          out.push_back(s);
        }
      }
      return out;
    }
  }
  return {};
}

// Greatest element of `candidates` that lies above every other candidate in
// `poset`; kLatticeFailure if there is none.
int GreatestOf(const Poset& poset, const std::vector<int>& candidates, bool dual, int n) {
  int found = -1;
  for (int c : candidates) {
    bool dominates = true;
    for (int d : candidates) {
      if (!(dual ? poset.Leq(c, d) : poset.Leq(d, c))) {
        dominates = false;
        break;
      }
    }
    if (dominates) {
      if (found != -1) {
        throw Error(ErrorCode::kLatticeFailure, "two extremal bounds");
      }
      found = c;
    }
  }
  if (found == -1) {
    std::string which = dual ? "least upper" : "greatest lower";
    throw Error(ErrorCode::kLatticeFailure, "no " + which + " bound among " +
                                                std::to_string(candidates.size()) +
                                                " candidates (n=" + std::to_string(n) + ")");
  }
  return found;
}

void CheckExtension(const Poset& poset, const LinearExtension& ext) {
  if (!IsLinearExtension(poset, ext)) {
    throw Error(ErrorCode::kOrderNotExtension, "generated order violates the poset relation");
  }
}

}  // namespace

bool CompareBases(const Matroid& m, BasisOrder order, ElementSet a, ElementSet b) {
  for (ElementSet s : {a, b}) {
    if (!m.IsBasis(s)) {
      throw Error(ErrorCode::kNotABasis, FormatSet(s, m.ground_size()) + " is not a basis");
    }
  }
  return CompareProfiles(order, a, ComputeActivityProfile(m, a), b, ComputeActivityProfile(m, b),
                         m.ground_size());
}

bool CompareBases(const ActivityTable& table, BasisOrder order, int a_index, int b_index) {
  const auto bases = table.matroid().bases();
  return CompareProfiles(order, bases[a_index], table.BasisProfile(a_index), bases[b_index],
                         table.BasisProfile(b_index), table.matroid().ground_size());
}

bool LeqExtIntInd(const Matroid& m, ElementSet i, ElementSet k) {
  const CrapoDecomposition di = DecomposeIndependent(m, i);
  const CrapoDecomposition dk = DecomposeIndependent(m, k);
  if (di.basis == dk.basis) return i.IsSubsetOf(k);
  const ActivityProfile pi = ComputeActivityProfile(m, i);
  const ActivityProfile pk = ComputeActivityProfile(m, k);
  return ((i - pi.ia) | pi.ea).IsSubsetOf((k - pk.ia) | pk.ea);
}

bool LeqExtIntInd(const ActivityTable& table, ElementSet i, ElementSet k) {
  const int a = table.RelatedBasisIndex(i);
  const int c = table.RelatedBasisIndex(k);
  if (a == c) return i.IsSubsetOf(k);
  return CompareBases(table, BasisOrder::kExtInt, a, c);
}

bool LeqFlipInd(const Matroid& m, ElementSet i, ElementSet k) {
  const CrapoDecomposition di = DecomposeIndependent(m, i);
  const CrapoDecomposition dk = DecomposeIndependent(m, k);
  if (di.basis == dk.basis) return k.IsSubsetOf(i);
  return LeqExtIntInd(m, i, k);
}

bool LeqFlipInd(const ActivityTable& table, ElementSet i, ElementSet k) {
  const int a = table.RelatedBasisIndex(i);
  const int c = table.RelatedBasisIndex(k);
  if (a == c) return k.IsSubsetOf(i);
  return CompareBases(table, BasisOrder::kExtInt, a, c);
}

std::string_view PosetKindName(PosetKind kind) {
  switch (kind) {
    case PosetKind::kExtBases:
      return "ext-bases";
    case PosetKind::kIntBases:
      return "int-bases";
    case PosetKind::kExtIntBases:
      return "extint-bases";
    case PosetKind::kExtIntInd:
      return "extint-ind";
    case PosetKind::kFlipInd:
      return "flip-ind";
    case PosetKind::kNbcExtInt:
      return "nbc-extint";
  }
  return "unknown";
}

std::optional<PosetKind> ParsePosetKind(std::string_view name) {
  for (PosetKind k : {PosetKind::kExtBases, PosetKind::kIntBases, PosetKind::kExtIntBases,
                      PosetKind::kExtIntInd, PosetKind::kFlipInd, PosetKind::kNbcExtInt}) {
    if (PosetKindName(k) == name) return k;
  }
  return std::nullopt;
}

Poset::Poset(std::vector<ElementSet> elements,
             const std::function<bool(ElementSet, ElementSet)>& leq)
    : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  const size_t n = elements_.size();
  leq_.assign(n * n, 0);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      leq_[i * n + j] = leq(elements_[i], elements_[j]) ? 1 : 0;
    }
  }
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) {
      if (!Less(i, j)) continue;
      bool cover = true;
      for (int k = 0; k < size() && cover; ++k) {
        if (Less(i, k) && Less(k, j)) cover = false;
      }
      if (cover) covers_.emplace_back(i, j);
    }
  }
}

int Poset::IndexOf(ElementSet s) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), s);
  if (it == elements_.end() || *it != s) return -1;
  return static_cast<int>(it - elements_.begin());
}

bool Poset::IsPartialOrder() const {
  for (int i = 0; i < size(); ++i) {
    if (!Leq(i, i)) return false;
    for (int j = 0; j < size(); ++j) {
      if (i != j && Leq(i, j) && Leq(j, i)) return false;
      if (!Leq(i, j)) continue;
      for (int k = 0; k < size(); ++k) {
        if (Leq(j, k) && !Leq(i, k)) return false;
      }
    }
  }
  return true;
}

std::vector<int> Poset::Heights() const {
  std::vector<int> height(size(), 0);
  // Covers are sorted by lower index, which is not a topological order, so
  // relax until stable; at most size() rounds.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [lo, hi] : covers_) {
      if (height[hi] < height[lo] + 1) {
        height[hi] = height[lo] + 1;
        changed = true;
      }
    }
  }
  return height;
}

Poset BuildPoset(const Matroid& m, PosetKind kind) { return BuildPoset(ActivityTable(m), kind); }

Poset BuildPoset(const ActivityTable& table, PosetKind kind) {
  std::vector<ElementSet> elements = PosetElements(table, kind);
  std::function<bool(ElementSet, ElementSet)> leq;
  switch (kind) {
    case PosetKind::kExtBases:
    case PosetKind::kIntBases:
    case PosetKind::kExtIntBases: {
      const BasisOrder order = kind == PosetKind::kExtBases   ? BasisOrder::kExternal
                               : kind == PosetKind::kIntBases ? BasisOrder::kInternal
                                                              : BasisOrder::kExtInt;
      leq = [&table, order](ElementSet a, ElementSet b) {
        return CompareBases(table, order, table.BasisIndex(a), table.BasisIndex(b));
      };
      break;
    }
    case PosetKind::kExtIntInd:
    case PosetKind::kNbcExtInt:
      leq = [&table](ElementSet i, ElementSet k) { return LeqExtIntInd(table, i, k); };
      break;
    case PosetKind::kFlipInd:
      leq = [&table](ElementSet i, ElementSet k) { return LeqFlipInd(table, i, k); };
      break;
  }
  return Poset(std::move(elements), leq);
}

bool IsLinearExtension(const Poset& poset, const LinearExtension& extension) {
  const int n = poset.size();
  if (static_cast<int>(extension.order.size()) != n) return false;
  std::vector<int> position(n, -1);
  for (int p = 0; p < n; ++p) {
    const int e = extension.order[p];
    if (e < 0 || e >= n || position[e] != -1) return false;
    position[e] = p;
  }
  for (auto [lo, hi] : poset.covers()) {
    if (position[lo] > position[hi]) return false;
  }
  return true;
}

namespace {

class Backtracker {
 public:
  Backtracker(const Poset& poset, uint64_t limit,
              const std::function<void(const LinearExtension&)>* visit)
      : poset_(poset),
        limit_(limit),
        visit_(visit),
        pending_(poset.size(), 0),
        placed_(poset.size(), false) {
    for (auto [lo, hi] : poset.covers()) ++pending_[hi];
    current_.order.reserve(poset.size());
  }

  uint64_t Run() {
    Recurse();
    return count_;
  }

 private:
  void Recurse() {
    if (count_ > limit_) return;
    if (static_cast<int>(current_.order.size()) == poset_.size()) {
      ++count_;
      if (visit_ != nullptr && count_ <= limit_) (*visit_)(current_);
      return;
    }
    for (int e = 0; e < poset_.size(); ++e) {
      if (placed_[e] || pending_[e] != 0) continue;
      Place(e, +1);
      Recurse();
      Place(e, -1);
      if (count_ > limit_) return;
    }
  }

  void Place(int e, int direction) {
    placed_[e] = direction > 0;
    if (direction > 0) {
      current_.order.push_back(e);
    } else {
      current_.order.pop_back();
    }
    for (auto [lo, hi] : poset_.covers()) {
      if (lo == e) pending_[hi] -= direction;
    }
  }

  const Poset& poset_;
  uint64_t limit_;
  const std::function<void(const LinearExtension&)>* visit_;
  std::vector<int> pending_;
  std::vector<bool> placed_;
  LinearExtension current_;
  uint64_t count_ = 0;
};

LinearExtension RandomExtension(const Poset& poset, std::mt19937_64& rng) {
  const int n = poset.size();
  std::vector<int> pending(n, 0);
  for (auto [lo, hi] : poset.covers()) ++pending[hi];
  std::vector<int> available;
  for (int e = 0; e < n; ++e) {
    if (pending[e] == 0) available.push_back(e);
  }
  LinearExtension ext;
  ext.order.reserve(n);
  while (!available.empty()) {
    std::uniform_int_distribution<size_t> pick(0, available.size() - 1);
    const size_t at = pick(rng);
    const int e = available[at];
    available.erase(available.begin() + static_cast<std::ptrdiff_t>(at));
    ext.order.push_back(e);
    for (auto [lo, hi] : poset.covers()) {
      if (lo == e && --pending[hi] == 0) {
        available.insert(std::upper_bound(available.begin(), available.end(), hi), hi);
      }
    }
  }
  return ext;
}

}  // namespace

uint64_t CountLinearExtensions(const Poset& poset, uint64_t limit) {
  return Backtracker(poset, limit, nullptr).Run();
}

bool ForEachLinearExtension(const Poset& poset, uint64_t cap, uint64_t seed,
                            const std::function<void(const LinearExtension&)>& visit) {
  if (cap == 0) {
    throw Error(ErrorCode::kInvalidArgument, "extension cap must be positive");
  }
  if (CountLinearExtensions(poset, cap) <= cap) {
    std::function<void(const LinearExtension&)> checked = [&](const LinearExtension& ext) {
      CheckExtension(poset, ext);
      visit(ext);
    };
    Backtracker(poset, cap, &checked).Run();
    return true;
  }
  std::mt19937_64 rng(seed);
  for (uint64_t s = 0; s < cap; ++s) {
    LinearExtension ext = RandomExtension(poset, rng);
    CheckExtension(poset, ext);
    visit(ext);
  }
  return false;
}

std::vector<LinearExtension> LinearExtensions(const Poset& poset, uint64_t cap, uint64_t seed) {
  std::vector<LinearExtension> out;
  ForEachLinearExtension(poset, cap, seed, [&](const LinearExtension& ext) { out.push_back(ext); });
  return out;
}

LinearExtension RandomLinearExtension(const Poset& poset, uint64_t seed) {
  std::mt19937_64 rng(seed);
  LinearExtension ext = RandomExtension(poset, rng);
  CheckExtension(poset, ext);
  return ext;
}

MeetJoin MeetJoinInd(const Matroid& m, ElementSet i, ElementSet k) {
  ActivityTable table(m);
  return MeetJoinInd(table, BuildPoset(table, PosetKind::kExtIntBases), i, k);
}

MeetJoin MeetJoinInd(const ActivityTable& table, const Poset& extint_bases, ElementSet i,
                     ElementSet k) {
  const int a = table.RelatedBasisIndex(i);
  const int c = table.RelatedBasisIndex(k);
  if (a == c) return {i & k, i | k};
  // Bases are sorted by mask in both the matroid and the poset, so basis
  // indices coincide with poset indices.
  if (extint_bases.Leq(a, c)) return {i, k};
  if (extint_bases.Leq(c, a)) return {k, i};
  std::vector<int> lower, upper;
  for (int x = 0; x < extint_bases.size(); ++x) {
    if (extint_bases.Leq(x, a) && extint_bases.Leq(x, c)) lower.push_back(x);
    if (extint_bases.Leq(a, x) && extint_bases.Leq(c, x)) upper.push_back(x);
  }
  const int n = table.matroid().ground_size();
  const int meet = GreatestOf(extint_bases, lower, false, n);
  const int join = GreatestOf(extint_bases, upper, true, n);
  return {extint_bases.element(meet), table.BasisProfile(join).ip};
}

std::vector<ElementSet> BooleanInterval(const Matroid& m, ElementSet b, ElementSet c) {
  ActivityTable table(m);
  const Poset bases = BuildPoset(table, PosetKind::kExtIntBases);
  const int bi = table.BasisIndex(b);
  const int ci = table.BasisIndex(c);
  const auto& covers = bases.covers();
  if (!std::binary_search(covers.begin(), covers.end(), std::make_pair(bi, ci))) {
    throw Error(ErrorCode::kNotACover,
                FormatSet(c, m.ground_size()) + " does not cover " + FormatSet(b, m.ground_size()));
  }
  const ActivityProfile& pc = table.BasisProfile(ci);
  std::vector<ElementSet> formula;
  for (ElementSet s : Subsets(pc.ia)) formula.push_back(s | pc.ip);
  std::sort(formula.begin(), formula.end());

  std::vector<ElementSet> scanned;
  for (ElementSet s : table.independent_sets()) {
    if (s != b && LeqExtIntInd(table, b, s) && LeqExtIntInd(table, s, c)) {
      scanned.push_back(s);
    }
  }
  if (scanned != formula) {
    throw Error(ErrorCode::kEquivalenceMismatch, "interval above " + FormatSet(b, m.ground_size()) +
                                                     " is not the boolean block of " +
                                                     FormatSet(c, m.ground_size()));
  }
  return formula;
}

ElementSet FlipInvolution(const Matroid& m, ElementSet independent) {
  return FlipInvolution(ActivityTable(m), independent);
}

ElementSet FlipInvolution(const ActivityTable& table, ElementSet independent) {
  const ActivityProfile& pc = table.BasisProfile(table.RelatedBasisIndex(independent));
  const ElementSet s = independent - pc.ip;
  return (pc.ia - s) | pc.ip;
}

std::string PosetToDot(const Poset& poset, int n, std::string_view name) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";
  auto label = [&](int i) {
    const std::string s = FormatSet(poset.element(i), n);
    return s.empty() ? std::string("∅") : s;
  };
  const std::vector<int> heights = poset.Heights();
  const int top = heights.empty() ? -1 : *std::max_element(heights.begin(), heights.end());
  for (int h = 0; h <= top; ++h) {
    out << "  { rank=same;";
    for (int i = 0; i < poset.size(); ++i) {
      if (heights[i] == h) out << " n" << i << ";";
    }
    out << " }\n";
  }
  for (int i = 0; i < poset.size(); ++i) {
    out << "  n" << i << " [label=\"" << label(i) << "\"];\n";
  }
  for (auto [lo, hi] : poset.covers()) {
    out << "  n" << lo << " -> n" << hi << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace activita
