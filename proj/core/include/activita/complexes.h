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

#ifndef ACTIVITA_COMPLEXES_H_
#define ACTIVITA_COMPLEXES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "activita/activity.h"
#include "activita/element_set.h"
#include "activita/matroid.h"

namespace activita {

enum class Flavor { kX, kY, kZ };

struct Vertex {
  Flavor flavor;
  int element;

  bool operator==(const Vertex&) const = default;
};

std::string FormatVertex(Vertex v);

// Which flavors of vertices a complex lives on.
struct FlavorSet {
  bool x = false;
  bool y = false;
  bool z = false;

  bool operator==(const FlavorSet&) const = default;
};

// A set of vertices of the tripled ground set {x_e, y_e, z_e : e in E},
// stored as its three supports.
struct Face {
  ElementSet x;
  ElementSet y;
  ElementSet z;

  int size() const { return x.size() + y.size() + z.size(); }
  bool empty() const { return x.empty() && y.empty() && z.empty(); }
  bool IsSubsetOf(const Face& o) const {
    return x.IsSubsetOf(o.x) && y.IsSubsetOf(o.y) && z.IsSubsetOf(o.z);
  }
  bool Contains(Vertex v) const;
  Face With(Vertex v) const;
  Face Without(Vertex v) const;
  // Only the vertices whose flavor is in `flavors`.
  Face RestrictedTo(FlavorSet flavors) const;
  std::vector<Vertex> Vertices() const;

  Face operator&(const Face& o) const { return {x & o.x, y & o.y, z & o.z}; }
  Face operator|(const Face& o) const { return {x | o.x, y | o.y, z | o.z}; }
  Face operator-(const Face& o) const { return {x - o.x, y - o.y, z - o.z}; }

  auto operator<=>(const Face&) const = default;
};

// Monomial notation, e.g. "x_{12345} y_{4} z_{25}"; "1" for the empty face.
std::string FormatFace(const Face& f, int n);

// A facet together with the independent set that generates it.
struct Facet {
  Face face;
  ElementSet tag;

  bool operator==(const Facet&) const = default;
};

// A pure complex given by its facets over the vertices of flavors
// `universe` and elements 1..n.
class SimplicialComplex {
 public:
  // Throws kNotPure if facets differ in size, kInvalidArgument if a facet
  // uses a vertex outside the universe or contains another facet.
  SimplicialComplex(int n, FlavorSet universe, std::vector<Facet> facets);

  int ground_size() const { return n_; }
  FlavorSet universe() const { return universe_; }
  int universe_size() const;
  const std::vector<Facet>& facets() const { return facets_; }
  // Facet cardinality d; the dimension is d - 1.
  int facet_size() const { return facets_.empty() ? 0 : facets_.front().face.size(); }
  int dimension() const { return facet_size() - 1; }
  // Index of the facet generated by `tag`, or -1.
  int FacetIndexByTag(ElementSet tag) const;

 private:
  int n_;
  FlavorSet universe_;
  std::vector<Facet> facets_;
};

// F(I) = x_{I ∪ EP(I)} y_Y z_{I ∪ EA(I)} where I = B - Y. Built both from
// the activities of I and as F(B) with z_Y moved to y_Y; the two are
// compared. Throws kNotIndependent.
Facet FacetF(const Matroid& m, ElementSet independent);
Facet FacetF(const ActivityTable& table, ElementSet independent);
// G(I) = y_{B_I - I} z_I for an nbc set I. Throws kNotNbc.
Facet FacetG(const Matroid& m, ElementSet nbc);

enum class ComplexKind { kAugmentedEa, kEa, kNbc, kAugmentedNbc };

std::string_view ComplexKindName(ComplexKind kind);
std::optional<ComplexKind> ParseComplexKind(std::string_view name);

// kAugmentedEa: F(I) for every independent I, on E(x,y,z).
// kEa: F(B) for every basis, on E(x,z).
// kNbc: the maximal nbc sets, on E(z).
// kAugmentedNbc: G(I) for every nbc set, on E(y,z).
// Facets are listed in increasing order of their tag. Building kEa and kNbc
// also checks they equal the induced subcomplex of their augmented version.
SimplicialComplex BuildComplex(const Matroid& m, ComplexKind kind);

// Maximal faces of { F restricted to `flavors` : F a facet }.
std::vector<Face> InducedFacets(const SimplicialComplex& complex, FlavorSet flavors);

struct FHVector {
  std::vector<int64_t> f;  // f[i] = faces with i vertices, i = 0..d
  std::vector<int64_t> h;  // h[0..d]
};

// Face counts by explicit traversal of the downsets of the facets.
std::vector<int64_t> FVector(const SimplicialComplex& complex);
// Face counts by inclusion-exclusion over sets of facets. Exponential in the
// number of facets; throws kInvalidArgument above 20 facets.
std::vector<int64_t> FVectorInclusionExclusion(const SimplicialComplex& complex);
// sum_i f_i (q-1)^{d-i} = sum_i h_i q^{d-i}.
std::vector<int64_t> HVectorFromF(const std::vector<int64_t>& f);
FHVector ComputeFHVector(const SimplicialComplex& complex);

}  // namespace activita

#endif  // ACTIVITA_COMPLEXES_H_
