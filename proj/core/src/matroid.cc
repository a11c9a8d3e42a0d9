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

#include "activita/matroid.h"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "activita/error.h"

namespace activita {

struct Matroid::Cache {
  std::once_flag circuits_once;
  std::vector<ElementSet> circuits;
  std::once_flag cocircuits_once;
  std::vector<ElementSet> cocircuits;
};

namespace {

bool Contains(std::span<const ElementSet> sorted, ElementSet s) {
  return std::binary_search(sorted.begin(), sorted.end(), s);
}

// Calls fn(mask) for every k-subset of {1..n}, in increasing mask order.
template <typename Fn>
void ForEachKSubset(int n, int k, Fn&& fn) {
  if (k == 0) {
    fn(ElementSet());
    return;
  }
  if (k > n) return;
  if (n == 64 && k == 64) {
    fn(ElementSet::Full(64));
    return;
  }
  uint64_t m = (k == 64) ? ~uint64_t{0} : (uint64_t{1} << k) - 1;
  const uint64_t limit_bit = (n == 64) ? 0 : (uint64_t{1} << n);
  while (true) {
    fn(ElementSet::FromMask(m));
    // Gosper's hack.
    const uint64_t c = m & (~m + 1);
    const uint64_t r = m + c;
    if (r == 0) return;  // overflowed past bit 63
    m = (((r ^ m) >> 2) / c) | r;
    if (limit_bit != 0 && m >= limit_bit) return;
  }
}

// Fundamental circuits of (basis, e) over all pairs. Every circuit C arises
// this way: extend C - e to a basis B, then C is the unique circuit of B + e.
std::vector<ElementSet> CircuitsFromBases(int n, std::span<const ElementSet> bases) {
  std::vector<ElementSet> out;
  const ElementSet ground = ElementSet::Full(n);
  for (ElementSet b : bases) {
    for (int e : ground - b) {
      ElementSet circuit = ElementSet::Singleton(e);
      for (int f : b) {
        if (Contains(bases, b.Without(f).With(e))) circuit = circuit.With(f);
      }
      out.push_back(circuit);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool IsPrime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

int64_t PowMod(int64_t base, int64_t exp, int64_t p) {
  int64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

// Rank over GF(p) of the submatrix on the given columns.
int RankModP(const std::vector<std::vector<int64_t>>& rows, ElementSet columns, int64_t p) {
  std::vector<std::vector<int64_t>> a;
  a.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<int64_t> r;
    for (int c : columns) r.push_back(row[c - 1]);
    a.push_back(std::move(r));
  }
  const int width = columns.size();
  int rank = 0;
  for (int col = 0; col < width && rank < static_cast<int>(a.size()); ++col) {
    int pivot = -1;
    for (int i = rank; i < static_cast<int>(a.size()); ++i) {
      if (a[i][col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    const int64_t inv = PowMod(a[rank][col], p - 2, p);
    for (auto& v : a[rank]) v = v * inv % p;
    for (int i = 0; i < static_cast<int>(a.size()); ++i) {
      if (i == rank || a[i][col] == 0) continue;
      const int64_t factor = a[i][col];
      for (int j = 0; j < width; ++j) {
        a[i][j] = ((a[i][j] - factor * a[rank][j]) % p + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

struct UnionFind {
  explicit UnionFind(int size) : parent(size) { std::iota(parent.begin(), parent.end(), 0); }
  int Find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool Unite(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<int> parent;
};

void CheckGroundSize(int n) {
  if (n < 1 || n > kMaxGroundSize) {
    throw Error(ErrorCode::kInvalidArgument,
                "ground set size " + std::to_string(n) + " not in 1..64");
  }
}

}  // namespace

std::string_view ProvenanceName(Provenance p) {
  switch (p) {
    case Provenance::kExplicit:
      return "explicit";
    case Provenance::kUniform:
      return "uniform";
    case Provenance::kGraphic:
      return "graphic";
    case Provenance::kLinear:
      return "linear";
    case Provenance::kDualOf:
      return "dual-of";
  }
  return "unknown";
}

std::optional<ExchangeViolation> FindExchangeViolation(std::span<const ElementSet> sorted_bases) {
  for (ElementSet a : sorted_bases) {
    for (ElementSet b : sorted_bases) {
      if (a == b) continue;
      for (int x : a - b) {
        bool found = false;
        for (int y : b - a) {
          if (Contains(sorted_bases, a.Without(x).With(y))) {
            found = true;
            break;
          }
        }
        if (!found) return ExchangeViolation{a, b, x};
      }
    }
  }
  return std::nullopt;
}

Matroid::Matroid(int n, std::vector<ElementSet> sorted_bases, Provenance provenance)
    : n_(n),
      rank_(sorted_bases.front().size()),
      provenance_(provenance),
      bases_(std::move(sorted_bases)),
      cache_(std::make_shared<Cache>()) {}

Matroid Matroid::FromBases(int n, std::vector<ElementSet> bases, Provenance provenance) {
  CheckGroundSize(n);
  if (bases.empty()) throw Error(ErrorCode::kEmptyBases, "no bases given");
  const ElementSet ground = ElementSet::Full(n);
  for (ElementSet b : bases) {
    if (!b.IsSubsetOf(ground)) {
      throw Error(ErrorCode::kElementOutOfRange,
                  "basis mask " + std::to_string(b.mask()) + " exceeds 1.." + std::to_string(n));
    }
    if (b.size() != bases.front().size()) {
      throw Error(ErrorCode::kUnequalCardinality, "bases " + FormatSet(bases.front(), n) + " and " +
                                                      FormatSet(b, n) + " differ in size");
    }
  }
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  if (auto v = FindExchangeViolation(bases)) {
    throw Error(ErrorCode::kExchangeAxiomViolated, "A=" + FormatSet(v->a_basis, n) +
                                                       " B=" + FormatSet(v->b_basis, n) +
                                                       " a=" + std::to_string(v->element));
  }
  return Matroid(n, std::move(bases), provenance);
}

Matroid Matroid::Uniform(int r, int n) {
  CheckGroundSize(n);
  if (r < 0 || r > n) {
    throw Error(ErrorCode::kRankOutOfRange,
                "rank " + std::to_string(r) + " not in 0.." + std::to_string(n));
  }
  std::vector<ElementSet> bases;
  ForEachKSubset(n, r, [&](ElementSet s) { bases.push_back(s); });
  return Matroid(n, std::move(bases), Provenance::kUniform);
}

Matroid Matroid::Graphic(int vertices, const std::vector<std::pair<int, int>>& edges) {
  if (edges.empty()) throw Error(ErrorCode::kNoEdges, "graph has no edges");
  const int n = static_cast<int>(edges.size());
  CheckGroundSize(n);
  for (auto [u, v] : edges) {
    if (u < 1 || v < 1 || u > vertices || v > vertices) {
      throw Error(ErrorCode::kElementOutOfRange,
                  "edge endpoint outside 1.." + std::to_string(vertices));
    }
  }
  UnionFind all(vertices + 1);
  int rank = 0;
  for (auto [u, v] : edges) rank += all.Unite(u, v) ? 1 : 0;

  std::vector<ElementSet> bases;
  ForEachKSubset(n, rank, [&](ElementSet s) {
    UnionFind forest(vertices + 1);
    for (int e : s) {
      if (!forest.Unite(edges[e - 1].first, edges[e - 1].second)) return;
    }
    bases.push_back(s);
  });
  return Matroid(n, std::move(bases), Provenance::kGraphic);
}

Matroid Matroid::LinearOverPrimeField(int p, const std::vector<std::vector<int64_t>>& rows) {
  if (!IsPrime(p) || p > 13) {
    throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not a prime <= 13");
  }
  if (rows.empty() || rows.front().empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty matrix");
  }
  const int n = static_cast<int>(rows.front().size());
  CheckGroundSize(n);
  std::vector<std::vector<int64_t>> reduced;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      throw Error(ErrorCode::kInvalidArgument, "ragged matrix");
    }
    std::vector<int64_t> r;
    for (int64_t v : row) r.push_back(((v % p) + p) % p);
    reduced.push_back(std::move(r));
  }
  const int rank = RankModP(reduced, ElementSet::Full(n), p);
  std::vector<ElementSet> bases;
  ForEachKSubset(n, rank, [&](ElementSet s) {
    if (RankModP(reduced, s, p) == rank) bases.push_back(s);
  });
  return Matroid(n, std::move(bases), Provenance::kLinear);
}

Matroid Matroid::Dual() const {
  std::vector<ElementSet> bases;
  bases.reserve(bases_.size());
  for (ElementSet b : bases_) bases.push_back(ground() - b);
  std::sort(bases.begin(), bases.end());
  return Matroid(n_, std::move(bases), Provenance::kDualOf);
}

Matroid Matroid::Relabel(const std::vector<int>& permutation) const {
  std::vector<int> sorted = permutation;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> identity(n_);
  std::iota(identity.begin(), identity.end(), 1);
  if (sorted != identity) {
    throw Error(ErrorCode::kNotAPermutation, "relabeling is not a permutation");
  }
  std::vector<ElementSet> bases;
  for (ElementSet b : bases_) {
    ElementSet image;
    for (int e : b) image = image.With(permutation[e - 1]);
    bases.push_back(image);
  }
  std::sort(bases.begin(), bases.end());
  return Matroid(n_, std::move(bases), provenance_);
}

bool Matroid::IsBasis(ElementSet s) const { return Contains(bases_, s); }

bool Matroid::IsIndependent(ElementSet s) const {
  return std::any_of(bases_.begin(), bases_.end(), [s](ElementSet b) { return s.IsSubsetOf(b); });
}

int Matroid::Rank(ElementSet s) const {
  int best = 0;
  for (ElementSet b : bases_) best = std::max(best, (s & b).size());
  return best;
}

const std::vector<ElementSet>& Matroid::Circuits() const {
  std::call_once(cache_->circuits_once,
                 [this] { cache_->circuits = CircuitsFromBases(n_, bases_); });
  return cache_->circuits;
}

const std::vector<ElementSet>& Matroid::Cocircuits() const {
  std::call_once(cache_->cocircuits_once, [this] { cache_->cocircuits = Dual().Circuits(); });
  return cache_->cocircuits;
}

ElementSet Matroid::FundamentalCircuit(ElementSet basis, int e) const {
  if (!IsBasis(basis)) {
    throw Error(ErrorCode::kNotABasis, FormatSet(basis, n_) + " is not a basis");
  }
  if (e < 1 || e > n_) {
    throw Error(ErrorCode::kElementOutOfRange, "element " + std::to_string(e));
  }
  if (basis.Contains(e)) {
    throw Error(ErrorCode::kElementInBasis, std::to_string(e) + " lies in " + FormatSet(basis, n_));
  }
  ElementSet circuit = ElementSet::Singleton(e);
  for (int f : basis) {
    if (IsBasis(basis.Without(f).With(e))) circuit = circuit.With(f);
  }
  return circuit;
}

std::vector<ElementSet> Matroid::IndependentSets() const {
  std::vector<ElementSet> out;
  for (ElementSet b : bases_) {
    for (ElementSet s : Subsets(b)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace activita
