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

#ifndef ACTIVITA_ACTIVITY_H_
#define ACTIVITA_ACTIVITY_H_

#include <vector>

#include "activita/element_set.h"
#include "activita/matroid.h"

namespace activita {

// External and internal activity of a subset S. ea and ep partition E - S;
// ia and ip partition S.
struct ActivityProfile {
  ElementSet ea;
  ElementSet ep;
  ElementSet ia;
  ElementSet ip;

  bool operator==(const ActivityProfile&) const = default;
};

// e not in s is externally active if it is the maximum of a circuit inside
// s + e.
ElementSet ExternallyActive(const Matroid& m, ElementSet s);
// i in s is internally active if it is externally active for E - s in the
// dual matroid. Evaluated through the cocircuits of m.
ElementSet InternallyActive(const Matroid& m, ElementSet s);

ActivityProfile ComputeActivityProfile(const Matroid& m, ElementSet s);

// Activities of a basis through basis exchange alone: e is externally active
// iff no larger e' in the basis can be swapped for it, and dually for
// internal activity. Independent of the circuit route; used as a cross-check.
// Throws kNotABasis.
ActivityProfile ExchangeActivityProfile(const Matroid& m, ElementSet basis);

// s = basis - y + x with x ⊆ EA(basis), y ⊆ IA(basis).
struct CrapoDecomposition {
  ElementSet basis;
  ElementSet x;
  ElementSet y;

  bool operator==(const CrapoDecomposition&) const = default;
};

// Scans every basis and asserts exactly one interval
// [B - IA(B), B + EA(B)] contains s. Throws kDecompositionNotFound or
// kDecompositionNotUnique if the matroid is inconsistent.
CrapoDecomposition DecomposeSubset(const Matroid& m, ElementSet s);
// As above with x = ∅; `basis` is the basis internally related to the
// independent set. Throws kNotIndependent.
CrapoDecomposition DecomposeIndependent(const Matroid& m, ElementSet independent);

// Circuits with their maximum removed, deduplicated and sorted.
std::vector<ElementSet> BrokenCircuits(const Matroid& m);
// True iff s contains no broken circuit.
bool IsNbc(const Matroid& m, ElementSet s);
// All nbc sets sorted by mask.
std::vector<ElementSet> NbcSets(const Matroid& m);

// Precomputed activities for every basis and the Crapo decomposition of every
// independent set. Construction is O(|I(M)|); lookups are O(log |I(M)|).
class ActivityTable {
 public:
  explicit ActivityTable(const Matroid& m);

  const Matroid& matroid() const { return matroid_; }
  const std::vector<ElementSet>& independent_sets() const { return independent_; }

  // Index into matroid().bases().
  int BasisIndex(ElementSet basis) const;
  const ActivityProfile& BasisProfile(int basis_index) const {
    return basis_profiles_[basis_index];
  }
  const ActivityProfile& BasisProfile(ElementSet basis) const {
    return basis_profiles_[BasisIndex(basis)];
  }

  // Index into independent_sets(); throws kNotIndependent.
  int IndependentIndex(ElementSet independent) const;
  // Index (into bases()) of the basis internally related to an independent set.
  int RelatedBasisIndex(ElementSet independent) const {
    return related_[IndependentIndex(independent)];
  }
  ElementSet RelatedBasis(ElementSet independent) const {
    return matroid_.bases()[RelatedBasisIndex(independent)];
  }
  // The Crapo y-part: RelatedBasis(i) - i.
  ElementSet DeletedActive(ElementSet independent) const {
    return RelatedBasis(independent) - independent;
  }

 private:
  Matroid matroid_;
  std::vector<ActivityProfile> basis_profiles_;
  std::vector<ElementSet> independent_;
  std::vector<int> related_;
};

}  // namespace activita

#endif  // ACTIVITA_ACTIVITY_H_
