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

#ifndef ACTIVITA_MATROID_H_
#define ACTIVITA_MATROID_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "activita/element_set.h"

namespace activita {

enum class Provenance { kExplicit, kUniform, kGraphic, kLinear, kDualOf };

std::string_view ProvenanceName(Provenance p);

// A matroid on the ordered ground set {1, ..., n}, stored extensionally by
// its bases. The order used for activities is always the natural order on
// integers; other orders are obtained with Relabel().
//
// Values are immutable. Circuits and cocircuits are computed on first use
// and cached; the cache is shared between copies and filled at most once.
class Matroid {
 public:
  // Validates the basis axioms exhaustively. Duplicates are removed and the
  // list is sorted by mask. Throws Error with kEmptyBases,
  // kElementOutOfRange, kUnequalCardinality or kExchangeAxiomViolated.
  static Matroid FromBases(int n, std::vector<ElementSet> bases,
                           Provenance provenance = Provenance::kExplicit);
  // U(r, n). Throws kRankOutOfRange unless 0 <= r <= n.
  static Matroid Uniform(int r, int n);
  // Cycle matroid of a multigraph; ground element i is the i-th edge.
  // Vertices are numbered 1..vertices. Throws kNoEdges.
  static Matroid Graphic(int vertices, const std::vector<std::pair<int, int>>& edges);
  // Column matroid of `rows` over GF(p); ground element i is column i.
  // Throws kNotPrime unless p is a prime <= 13.
  static Matroid LinearOverPrimeField(int p, const std::vector<std::vector<int64_t>>& rows);

  Matroid Dual() const;
  // The matroid whose element permutation[e - 1] plays the role of e here.
  // `permutation` is a permutation of 1..n.
  Matroid Relabel(const std::vector<int>& permutation) const;

  int ground_size() const { return n_; }
  ElementSet ground() const { return ElementSet::Full(n_); }
  int rank() const { return rank_; }
  Provenance provenance() const { return provenance_; }
  std::span<const ElementSet> bases() const { return bases_; }

  bool IsBasis(ElementSet s) const;
  bool IsIndependent(ElementSet s) const;
  int Rank(ElementSet s) const;

  // Minimal dependent sets, sorted by mask.
  const std::vector<ElementSet>& Circuits() const;
  // Circuits of the dual matroid.
  const std::vector<ElementSet>& Cocircuits() const;
  // Unique circuit inside basis ∪ {e}. Throws kNotABasis or kElementInBasis.
  ElementSet FundamentalCircuit(ElementSet basis, int e) const;

  // All independent sets sorted by mask.
  std::vector<ElementSet> IndependentSets() const;

  bool operator==(const Matroid& other) const { return n_ == other.n_ && bases_ == other.bases_; }

 private:
  struct Cache;

  Matroid(int n, std::vector<ElementSet> sorted_bases, Provenance provenance);

  int n_ = 0;
  int rank_ = 0;
  Provenance provenance_ = Provenance::kExplicit;
  std::vector<ElementSet> bases_;
  std::shared_ptr<Cache> cache_;
};

// Bases A, B and a in A - B such that no b in B - A makes A - a + b a basis.
struct ExchangeViolation {
  ElementSet a_basis;
  ElementSet b_basis;
  int element;
};
// `sorted_bases` must be sorted by mask.
std::optional<ExchangeViolation> FindExchangeViolation(std::span<const ElementSet> sorted_bases);

}  // namespace activita

#endif  // ACTIVITA_MATROID_H_
