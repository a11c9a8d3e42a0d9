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

#ifndef ACTIVITA_ACTIVE_ORDERS_H_
#define ACTIVITA_ACTIVE_ORDERS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "activita/activity.h"
#include "activita/element_set.h"
#include "activita/matroid.h"

namespace activita {

// Las Vergnas orders on bases.
enum class BasisOrder { kExternal, kInternal, kExtInt };

// Evaluates every equivalent form of the chosen order's definition and
// returns their common verdict for A <= B. Throws kNotABasis, or
// kEquivalenceMismatch if two forms disagree.
bool CompareBases(const Matroid& m, BasisOrder order, ElementSet a, ElementSet b);
bool CompareBases(const ActivityTable& table, BasisOrder order, int a_index, int b_index);

// External/internal order on independent sets, evaluated from the
// definition with the activities of the sets themselves: unrelated sets
// compare by I - IA(I) + EA(I) ⊆ K - IA(K) + EA(K), related ones by I ⊆ K.
// Throws kNotIndependent.
bool LeqExtIntInd(const Matroid& m, ElementSet i, ElementSet k);
// Same order, evaluated through the related bases.
bool LeqExtIntInd(const ActivityTable& table, ElementSet i, ElementSet k);

// The flipped order: identical across distinct related bases, reversed
// containment inside each block.
bool LeqFlipInd(const Matroid& m, ElementSet i, ElementSet k);
bool LeqFlipInd(const ActivityTable& table, ElementSet i, ElementSet k);

enum class PosetKind {
  kExtBases,
  kIntBases,
  kExtIntBases,
  kExtIntInd,
  kFlipInd,
  kNbcExtInt,
};

std::string_view PosetKindName(PosetKind kind);
std::optional<PosetKind> ParsePosetKind(std::string_view name);

// A finite poset on subsets, with the full comparability relation and its
// cover relations materialized. Elements are sorted by mask.
class Poset {
 public:
  Poset(std::vector<ElementSet> elements, const std::function<bool(ElementSet, ElementSet)>& leq);

  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<ElementSet>& elements() const { return elements_; }
  ElementSet element(int i) const { return elements_[i]; }
  // -1 if absent.
  int IndexOf(ElementSet s) const;

  bool Leq(int i, int j) const { return leq_[i * elements_.size() + j] != 0; }
  bool Less(int i, int j) const { return i != j && Leq(i, j); }
  // Pairs (i, j) with j covering i, sorted.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  // Reflexive, antisymmetric and transitive.
  bool IsPartialOrder() const;
  // Length of the longest chain of covers ending at each element.
  std::vector<int> Heights() const;

 private:
  std::vector<ElementSet> elements_;
  std::vector<uint8_t> leq_;
  std::vector<std::pair<int, int>> covers_;
};

Poset BuildPoset(const Matroid& m, PosetKind kind);
Poset BuildPoset(const ActivityTable& table, PosetKind kind);

// A total order of a poset's elements, as indices into elements().
struct LinearExtension {
  std::vector<int> order;

  bool operator==(const LinearExtension&) const = default;
};

bool IsLinearExtension(const Poset& poset, const LinearExtension& extension);

// Number of linear extensions, counting stops once `limit` is exceeded
// (returns limit + 1 then).
uint64_t CountLinearExtensions(const Poset& poset, uint64_t limit);

// Streams linear extensions to `visit`. When the poset has at most `cap`
// extensions they are all produced, in lexicographic order of indices;
// otherwise `cap` random topological sorts seeded by `seed` are produced.
// Returns true when the enumeration was exhaustive.
bool ForEachLinearExtension(const Poset& poset, uint64_t cap, uint64_t seed,
                            const std::function<void(const LinearExtension&)>& visit);

std::vector<LinearExtension> LinearExtensions(const Poset& poset, uint64_t cap, uint64_t seed);

// One seeded random topological sort.
LinearExtension RandomLinearExtension(const Poset& poset, uint64_t seed);

struct MeetJoin {
  ElementSet meet;
  ElementSet join;

  bool operator==(const MeetJoin&) const = default;
};

// Meet and join in the external/internal order on independent sets.
// Related sets: intersection and union. Sets related to incomparable bases
// A, C: the basis A ∧ C, and IP(A ∨ C). Sets related to comparable bases:
// the smaller and the larger set. Throws kLatticeFailure when the bases
// poset has no unique bound.
MeetJoin MeetJoinInd(const Matroid& m, ElementSet i, ElementSet k);
MeetJoin MeetJoinInd(const ActivityTable& table, const Poset& extint_bases, ElementSet i,
                     ElementSet k);

// The half-open interval (B, C] of the order on independent sets, for C
// covering B among bases: { S + IP(C) : S ⊆ IA(C) }, checked against a scan
// of the poset. Throws kNotACover.
std::vector<ElementSet> BooleanInterval(const Matroid& m, ElementSet b, ElementSet c);

// Turns each block { S + IP(C) : S ⊆ IA(C) } upside down:
// S + IP(C) maps to (IA(C) - S) + IP(C). Throws kNotIndependent.
ElementSet FlipInvolution(const Matroid& m, ElementSet independent);
ElementSet FlipInvolution(const ActivityTable& table, ElementSet independent);

// Graphviz digraph of the cover relations, nodes labelled with FormatSet
// and grouped into ranks by height.
std::string PosetToDot(const Poset& poset, int n, std::string_view name);

}  // namespace activita

#endif  // ACTIVITA_ACTIVE_ORDERS_H_
