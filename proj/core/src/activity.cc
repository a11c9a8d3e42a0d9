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

#include "activita/activity.h"

#include <algorithm>
#include <optional>

#include "activita/error.h"

namespace activita {

namespace {

// Elements e outside s that are the maximum of some circuit inside s + e.
ElementSet ActiveOutside(const std::vector<ElementSet>& circuits, ElementSet ground, ElementSet s) {
  ElementSet active;
  for (ElementSet circuit : circuits) {
    const int top = circuit.Max();
    if (s.Contains(top) || active.Contains(top)) continue;
    if (circuit.Without(top).IsSubsetOf(s)) active = active.With(top);
  }
  return active & ground;
}

}  // namespace

ElementSet ExternallyActive(const Matroid& m, ElementSet s) {
  return ActiveOutside(m.Circuits(), m.ground(), s);
}

ElementSet InternallyActive(const Matroid& m, ElementSet s) {
  const ElementSet complement = m.ground() - s;
  return ActiveOutside(m.Cocircuits(), m.ground(), complement);
}

ActivityProfile ComputeActivityProfile(const Matroid& m, ElementSet s) {
  ActivityProfile p;
  p.ea = ExternallyActive(m, s);
  p.ep = m.ground() - s - p.ea;
  p.ia = InternallyActive(m, s);
  p.ip = s - p.ia;
  return p;
}

ActivityProfile ExchangeActivityProfile(const Matroid& m, ElementSet basis) {
  if (!m.IsBasis(basis)) {
    throw Error(ErrorCode::kNotABasis, FormatSet(basis, m.ground_size()) + " is not a basis");
  }
  ActivityProfile p;
  const ElementSet outside = m.ground() - basis;
  for (int e : outside) {
    bool passive = false;
    for (int f : basis) {
      if (f > e && m.IsBasis(basis.Without(f).With(e))) {
        passive = true;
        break;
      }
    }
    ElementSet& side = passive ? p.ep : p.ea;
    side = side.With(e);
  }
  for (int e : basis) {
    bool passive = false;
    for (int f : outside) {
      if (f > e && m.IsBasis(basis.Without(e).With(f))) {
        passive = true;
        break;
      }
    }
    ElementSet& side = passive ? p.ip : p.ia;
    side = side.With(e);
  }
  return p;
}

CrapoDecomposition DecomposeSubset(const Matroid& m, ElementSet s) {
  std::optional<CrapoDecomposition> found;
  for (ElementSet b : m.bases()) {
    const ElementSet lower = b - InternallyActive(m, b);
    const ElementSet upper = b | ExternallyActive(m, b);
    if (!lower.IsSubsetOf(s) || !s.IsSubsetOf(upper)) continue;
    if (found) {
      throw Error(ErrorCode::kDecompositionNotUnique, FormatSet(s, m.ground_size()) +
                                                          " lies under bases " +
                                                          FormatSet(found->basis, m.ground_size()) +
                                                          " and " + FormatSet(b, m.ground_size()));
    }
    found = CrapoDecomposition{b, s - b, b - s};
  }
  if (!found) {
    throw Error(ErrorCode::kDecompositionNotFound,
                "no interval contains " + FormatSet(s, m.ground_size()));
  }
  return *found;
}

CrapoDecomposition DecomposeIndependent(const Matroid& m, ElementSet independent) {
  if (!m.IsIndependent(independent)) {
    throw Error(ErrorCode::kNotIndependent,
                FormatSet(independent, m.ground_size()) + " is dependent");
  }
  return DecomposeSubset(m, independent);
}

std::vector<ElementSet> BrokenCircuits(const Matroid& m) {
  std::vector<ElementSet> out;
  for (ElementSet c : m.Circuits()) out.push_back(c.Without(c.Max()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool IsNbc(const Matroid& m, ElementSet s) {
  for (ElementSet c : m.Circuits()) {
    if (c.Without(c.Max()).IsSubsetOf(s)) return false;
  }
  return true;
}

std::vector<ElementSet> NbcSets(const Matroid& m) {
  std::vector<ElementSet> out;
  for (ElementSet s : m.IndependentSets()) {
    if (IsNbc(m, s)) out.push_back(s);
  }
  return out;
}

ActivityTable::ActivityTable(const Matroid& m) : matroid_(m), independent_(m.IndependentSets()) {
  const auto bases = m.bases();
  basis_profiles_.reserve(bases.size());
  for (ElementSet b : bases) basis_profiles_.push_back(ComputeActivityProfile(m, b));

  related_.assign(independent_.size(), -1);
  for (int bi = 0; bi < static_cast<int>(bases.size()); ++bi) {
    for (ElementSet y : Subsets(basis_profiles_[bi].ia)) {
      const int ii = IndependentIndex(bases[bi] - y);
      if (related_[ii] != -1) {
        throw Error(ErrorCode::kDecompositionNotUnique,
                    FormatSet(independent_[ii], m.ground_size()) + " is related to two bases");
      }
      related_[ii] = bi;
    }
  }
  for (size_t i = 0; i < independent_.size(); ++i) {
    if (related_[i] == -1) {
      throw Error(ErrorCode::kDecompositionNotFound,
                  FormatSet(independent_[i], m.ground_size()) + " has no related basis");
    }
  }
}

int ActivityTable::BasisIndex(ElementSet basis) const {
  const auto bases = matroid_.bases();
  auto it = std::lower_bound(bases.begin(), bases.end(), basis);
  if (it == bases.end() || *it != basis) {
    throw Error(ErrorCode::kNotABasis,
                FormatSet(basis, matroid_.ground_size()) + " is not a basis");
  }
  return static_cast<int>(it - bases.begin());
}

int ActivityTable::IndependentIndex(ElementSet independent) const {
  auto it = std::lower_bound(independent_.begin(), independent_.end(), independent);
  if (it == independent_.end() || *it != independent) {
    throw Error(ErrorCode::kNotIndependent,
                FormatSet(independent, matroid_.ground_size()) + " is dependent");
  }
  return static_cast<int>(it - independent_.begin());
}

}  // namespace activita
