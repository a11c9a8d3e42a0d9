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

#include "activita/complexes.h"

#include <algorithm>
#include <functional>

#include "activita/error.h"

namespace activita {

namespace {

ElementSet& Support(Face& f, Flavor flavor) {
  switch (flavor) {
    case Flavor::kX:
      return f.x;
    case Flavor::kY:
      return f.y;
    case Flavor::kZ:
      return f.z;
  }
  return f.z;
}

ElementSet Support(const Face& f, Flavor flavor) {
  switch (flavor) {
    case Flavor::kX:
      return f.x;
    case Flavor::kY:
      return f.y;
    case Flavor::kZ:
      return f.z;
  }
  return f.z;
}

int64_t Binomial(int64_t n, int64_t k) {
  if (k < 0 || k > n) return 0;
  int64_t result = 1;
  for (int64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

bool Fits(const Face& f, FlavorSet universe, int n) {
  const ElementSet ground = ElementSet::Full(n);
  auto ok = [&](ElementSet s, bool allowed) {
    return s.IsSubsetOf(ground) && (allowed || s.empty());
  };
  return ok(f.x, universe.x) && ok(f.y, universe.y) && ok(f.z, universe.z);
}

std::vector<Face> SortedFaces(const std::vector<Facet>& facets) {
  std::vector<Face> out;
  for (const Facet& f : facets) out.push_back(f.face);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string FormatVertex(Vertex v) {
  const char* prefix = v.flavor == Flavor::kX ? "x" : v.flavor == Flavor::kY ? "y" : "z";
  return std::string(prefix) + "_" + std::to_string(v.element);
}

bool Face::Contains(Vertex v) const { return Support(*this, v.flavor).Contains(v.element); }

Face Face::With(Vertex v) const {
  Face out = *this;
  ElementSet& s = Support(out, v.flavor);
  s = s.With(v.element);
  return out;
}

Face Face::Without(Vertex v) const {
  Face out = *this;
  ElementSet& s = Support(out, v.flavor);
  s = s.Without(v.element);
  return out;
}

Face Face::RestrictedTo(FlavorSet flavors) const {
  return {flavors.x ? x : ElementSet(), flavors.y ? y : ElementSet(), flavors.z ? z : ElementSet()};
}

std::vector<Vertex> Face::Vertices() const {
  std::vector<Vertex> out;
  for (int e : x) out.push_back({Flavor::kX, e});
  for (int e : y) out.push_back({Flavor::kY, e});
  for (int e : z) out.push_back({Flavor::kZ, e});
  return out;
}

std::string FormatFace(const Face& f, int n) {
  std::string out;
  auto part = [&](const char* name, ElementSet s) {
    if (s.empty()) return;
    if (!out.empty()) out += ' ';
    out += std::string(name) + "_{" + FormatSet(s, n) + "}";
  };
  part("x", f.x);
  part("y", f.y);
  part("z", f.z);
  return out.empty() ? "1" : out;
}

SimplicialComplex::SimplicialComplex(int n, FlavorSet universe, std::vector<Facet> facets)
    : n_(n), universe_(universe), facets_(std::move(facets)) {
  for (const Facet& f : facets_) {
    if (f.face.size() != facets_.front().face.size()) {
      throw Error(ErrorCode::kNotPure,
                  FormatFace(f.face, n) + " has size " + std::to_string(f.face.size()));
    }
    if (!Fits(f.face, universe, n)) {
      throw Error(ErrorCode::kInvalidArgument,
                  FormatFace(f.face, n) + " leaves the vertex universe");
    }
  }
  for (size_t i = 0; i < facets_.size(); ++i) {
    for (size_t j = 0; j < facets_.size(); ++j) {
      if (i != j && facets_[i].face.IsSubsetOf(facets_[j].face)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "facet " + FormatFace(facets_[i].face, n) + " repeated or nested");
      }
    }
  }
}

int SimplicialComplex::universe_size() const {
  return n_ * ((universe_.x ? 1 : 0) + (universe_.y ? 1 : 0) + (universe_.z ? 1 : 0));
}

int SimplicialComplex::FacetIndexByTag(ElementSet tag) const {
  for (size_t i = 0; i < facets_.size(); ++i) {
    if (facets_[i].tag == tag) return static_cast<int>(i);
  }
  return -1;
}

Facet FacetF(const Matroid& m, ElementSet independent) {
  return FacetF(ActivityTable(m), independent);
}

Facet FacetF(const ActivityTable& table, ElementSet independent) {
  const Matroid& m = table.matroid();
  const int bi = table.RelatedBasisIndex(independent);
  const ElementSet basis = m.bases()[bi];
  const ElementSet y = basis - independent;

  const ActivityProfile own = ComputeActivityProfile(m, independent);
  const Face direct{independent | own.ep, y, independent | own.ea};

  const ActivityProfile& pb = table.BasisProfile(bi);
  const Face basis_face{basis | pb.ep, ElementSet(), basis | pb.ea};
  const Face moved{basis_face.x, y, basis_face.z - y};

  if (direct != moved) {
    throw Error(ErrorCode::kEquivalenceMismatch,
                "F(" + FormatSet(independent, m.ground_size()) + ") is " +
                    FormatFace(direct, m.ground_size()) + " directly but " +
                    FormatFace(moved, m.ground_size()) + " from its basis");
  }
  return {direct, independent};
}

Facet FacetG(const Matroid& m, ElementSet nbc) {
  if (!m.IsIndependent(nbc) || !IsNbc(m, nbc)) {
    throw Error(ErrorCode::kNotNbc, FormatSet(nbc, m.ground_size()) + " is not nbc");
  }
  const CrapoDecomposition d = DecomposeIndependent(m, nbc);
  return {Face{ElementSet(), d.basis - nbc, nbc}, nbc};
}

std::string_view ComplexKindName(ComplexKind kind) {
  switch (kind) {
    case ComplexKind::kAugmentedEa:
      return "augmented-ea";
    case ComplexKind::kEa:
      return "ea";
    case ComplexKind::kNbc:
      return "nbc";
    case ComplexKind::kAugmentedNbc:
      return "augmented-nbc";
  }
  return "unknown";
}

std::optional<ComplexKind> ParseComplexKind(std::string_view name) {
  for (ComplexKind k : {ComplexKind::kAugmentedEa, ComplexKind::kEa, ComplexKind::kNbc,
                        ComplexKind::kAugmentedNbc}) {
    if (ComplexKindName(k) == name) return k;
  }
  return std::nullopt;
}

std::vector<Face> InducedFacets(const SimplicialComplex& complex, FlavorSet flavors) {
  std::vector<Face> restricted;
  for (const Facet& f : complex.facets()) restricted.push_back(f.face.RestrictedTo(flavors));
  std::sort(restricted.begin(), restricted.end());
  restricted.erase(std::unique(restricted.begin(), restricted.end()), restricted.end());
  std::vector<Face> maximal;
  for (const Face& f : restricted) {
    bool dominated = false;
    for (const Face& g : restricted) {
      if (f != g && f.IsSubsetOf(g)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(f);
  }
  return maximal;
}

SimplicialComplex BuildComplex(const Matroid& m, ComplexKind kind) {
  const int n = m.ground_size();
  const ActivityTable table(m);
  std::vector<Facet> facets;
  switch (kind) {
    case ComplexKind::kAugmentedEa:
      for (ElementSet s : table.independent_sets()) facets.push_back(FacetF(table, s));
      return SimplicialComplex(n, {true, true, true}, std::move(facets));
    case ComplexKind::kEa: {
      for (ElementSet b : m.bases()) facets.push_back(FacetF(table, b));
      SimplicialComplex ea(n, {true, false, true}, std::move(facets));
      const SimplicialComplex augmented = BuildComplex(m, ComplexKind::kAugmentedEa);
      if (InducedFacets(augmented, {true, false, true}) != SortedFaces(ea.facets())) {
        throw Error(ErrorCode::kEquivalenceMismatch,
                    "external activity complex is not the induced subcomplex");
      }
      return ea;
    }
    case ComplexKind::kNbc: {
      const std::vector<ElementSet> nbc = NbcSets(m);
      for (ElementSet s : nbc) {
        const bool maximal = std::none_of(nbc.begin(), nbc.end(),
                                          [s](ElementSet t) { return t != s && s.IsSubsetOf(t); });
        if (maximal) facets.push_back({Face{ElementSet(), ElementSet(), s}, s});
      }
      SimplicialComplex complex(n, {false, false, true}, std::move(facets));
      const SimplicialComplex augmented = BuildComplex(m, ComplexKind::kAugmentedNbc);
      if (InducedFacets(augmented, {false, false, true}) != SortedFaces(complex.facets())) {
        throw Error(ErrorCode::kEquivalenceMismatch, "nbc complex is not the induced subcomplex");
      }
      return complex;
    }
    case ComplexKind::kAugmentedNbc:
      for (ElementSet s : NbcSets(m)) facets.push_back(FacetG(m, s));
      return SimplicialComplex(n, {false, true, true}, std::move(facets));
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown complex kind");
}

std::vector<int64_t> FVector(const SimplicialComplex& complex) {
  const int d = complex.facet_size();
  std::vector<int64_t> f(d + 1, 0);
  if (complex.facets().empty()) return f;
  std::vector<Face> level = SortedFaces(complex.facets());
  for (int size = d; size >= 0; --size) {
    f[size] = static_cast<int64_t>(level.size());
    if (size == 0) break;
    std::vector<Face> next;
    for (const Face& face : level) {
      for (Vertex v : face.Vertices()) next.push_back(face.Without(v));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
  return f;
}

std::vector<int64_t> FVectorInclusionExclusion(const SimplicialComplex& complex) {
  const auto& facets = complex.facets();
  if (facets.size() > 20) {
    throw Error(ErrorCode::kInvalidArgument, "inclusion-exclusion limited to 20 facets");
  }
  const int d = complex.facet_size();
  std::vector<int64_t> f(d + 1, 0);
  // Adds (-1)^{|T|+1} C(|∩T|, i) for every nonempty T extending the current
  // choice with facets from index `from` on.
  std::function<void(size_t, const Face&, int)> recurse = [&](size_t from, const Face& meet,
                                                              int chosen) {
    for (size_t j = from; j < facets.size(); ++j) {
      const Face next = chosen == 0 ? facets[j].face : (meet & facets[j].face);
      const int64_t sign = (chosen % 2 == 0) ? 1 : -1;
      for (int i = 0; i <= d; ++i) f[i] += sign * Binomial(next.size(), i);
      recurse(j + 1, next, chosen + 1);
    }
  };
  recurse(0, Face{}, 0);
  return f;
}

std::vector<int64_t> HVectorFromF(const std::vector<int64_t>& f) {
  const int d = static_cast<int>(f.size()) - 1;
  std::vector<int64_t> h(d + 1, 0);
  for (int k = 0; k <= d; ++k) {
    for (int i = 0; i <= k; ++i) {
      const int64_t sign = ((k - i) % 2 == 0) ? 1 : -1;
      h[k] += sign * Binomial(d - i, k - i) * f[i];
    }
  }
  return h;
}

FHVector ComputeFHVector(const SimplicialComplex& complex) {
  FHVector out;
  out.f = FVector(complex);
  out.h = HVectorFromF(out.f);
  return out;
}

}  // namespace activita
