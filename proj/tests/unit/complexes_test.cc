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

#include <gtest/gtest.h>

#include "../fixtures.h"
#include "../oracles.h"
#include "activita/error.h"

namespace activita {
namespace {

using testing::M5;
using testing::S;

Face XYZ(const char* x, const char* y, const char* z) { return Face{S(x), S(y), S(z)}; }

TEST(ComplexesTest, M5ExternalActivityFacetTable) {
  const Matroid m = M5();
  const struct {
    const char* basis;
    const char* x;
    const char* z;
  } rows[] = {{"345", "12345", "345"}, {"135", "12345", "135"}, {"245", "12345", "245"},
              {"235", "12345", "235"}, {"125", "1245", "1235"}, {"134", "1234", "1345"},
              {"234", "1234", "2345"}, {"124", "124", "12345"}};
  for (const auto& row : rows) {
    EXPECT_EQ(FacetF(m, S(row.basis)).face, XYZ(row.x, "", row.z)) << row.basis;
  }
  const SimplicialComplex ea = BuildComplex(m, ComplexKind::kEa);
  EXPECT_EQ(ea.facets().size(), 8u);
  for (const auto& row : rows) {
    const int idx = ea.FacetIndexByTag(S(row.basis));
    ASSERT_GE(idx, 0);
    EXPECT_EQ(ea.facets()[idx].face, XYZ(row.x, "", row.z));
  }
}

TEST(ComplexesTest, M5BlockOf245) {
  const Matroid m = M5();
  EXPECT_EQ(FacetF(m, S("245")).face, XYZ("12345", "", "245"));
  EXPECT_EQ(FacetF(m, S("25")).face, XYZ("12345", "4", "25"));
  EXPECT_EQ(FacetF(m, S("24")).face, XYZ("12345", "5", "24"));
  EXPECT_EQ(FacetF(m, S("2")).face, XYZ("12345", "45", "2"));
}

TEST(ComplexesTest, FormatFace) {
  EXPECT_EQ(FormatFace(XYZ("12345", "4", "25"), 5), "x_{12345} y_{4} z_{25}");
  EXPECT_EQ(FormatFace(Face{}, 5), "1");
  EXPECT_EQ(FormatVertex({Flavor::kY, 3}), "y_3");
}

TEST(ComplexesTest, FacetsAreTheStatedFormula) {
  for (const auto& [name, m] : testing::Corpus()) {
    for (ElementSet i : m.IndependentSets()) {
      const oracle::Activities a = oracle::ActivitiesOf(m, i);
      const Face f = FacetF(m, i).face;
      EXPECT_EQ(f.x, i | a.ep) << name;
      EXPECT_EQ(f.z, i | a.ea) << name;
      EXPECT_EQ(f.size(), m.ground_size() + m.rank()) << name;
    }
  }
}

TEST(ComplexesTest, M5FaceAndHVectors) {
  const Matroid m = M5();
  const SimplicialComplex aug = BuildComplex(m, ComplexKind::kAugmentedEa);
  EXPECT_EQ(aug.facets().size(), 24u);
  EXPECT_EQ(aug.facet_size(), 8);
  EXPECT_EQ(aug.universe_size(), 15);
  EXPECT_EQ(ComputeFHVector(aug).h, (std::vector<int64_t>{1, 5, 10, 8, 0, 0, 0, 0, 0}));

  const SimplicialComplex nbc = BuildComplex(m, ComplexKind::kAugmentedNbc);
  EXPECT_EQ(nbc.facets().size(), 18u);
  EXPECT_EQ(nbc.universe_size(), 10);
  EXPECT_EQ(ComputeFHVector(nbc).h, (std::vector<int64_t>{1, 5, 8, 4}));

  const SimplicialComplex plain = BuildComplex(m, ComplexKind::kNbc);
  EXPECT_EQ(plain.facets().size(), 4u);
  EXPECT_EQ(plain.universe_size(), 5);
}

TEST(ComplexesTest, FVectorsAgreeWithOracles) {
  for (const auto& [name, m] : testing::Corpus()) {
    for (ComplexKind kind : {ComplexKind::kAugmentedEa, ComplexKind::kEa, ComplexKind::kNbc,
                             ComplexKind::kAugmentedNbc}) {
      const SimplicialComplex c = BuildComplex(m, kind);
      std::vector<Face> faces;
      for (const Facet& f : c.facets()) faces.push_back(f.face);
      const std::vector<int64_t> f = FVector(c);
      EXPECT_EQ(f, oracle::FaceCounts(faces, c.facet_size())) << name;
      if (c.facets().size() <= 20) {
        EXPECT_EQ(f, FVectorInclusionExclusion(c)) << name;
      }
    }
  }
}

TEST(ComplexesTest, HVectorOfSimplexAndBoundary) {
  EXPECT_EQ(HVectorFromF({1, 3, 3, 1}), (std::vector<int64_t>{1, 0, 0, 0}));
  // Boundary of a triangle: f = (1, 3, 3), h = (1, 1, 1).
  EXPECT_EQ(HVectorFromF({1, 3, 3}), (std::vector<int64_t>{1, 1, 1}));
}

TEST(ComplexesTest, ConstructionErrors) {
  const FlavorSet z_only{false, false, true};
  try {
    SimplicialComplex(3, z_only, {{XYZ("", "", "12"), S("12")}, {XYZ("", "", "3"), S("3")}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotPure);
  }
  try {
    SimplicialComplex(3, z_only, {{XYZ("1", "", "2"), S("12")}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
  try {
    FacetG(M5(), S("12"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotNbc);
  }
}

TEST(ComplexesTest, NbcFacets) {
  const Matroid m = M5();
  EXPECT_EQ(FacetG(m, S("2")).face, XYZ("", "45", "2"));
  EXPECT_EQ(FacetG(m, S("135")).face, XYZ("", "", "135"));
}

TEST(ComplexesTest, KindNames) {
  for (ComplexKind k : {ComplexKind::kAugmentedEa, ComplexKind::kEa, ComplexKind::kNbc,
                        ComplexKind::kAugmentedNbc}) {
    EXPECT_EQ(ParseComplexKind(ComplexKindName(k)), k);
  }
  EXPECT_FALSE(ParseComplexKind("x").has_value());
}

}  // namespace
}  // namespace activita
