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

#include <gtest/gtest.h>

#include "../fixtures.h"
#include "../oracles.h"
#include "activita/error.h"

namespace activita {
namespace {

using testing::M5;
using testing::S;

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvalidArgument;
}

TEST(MatroidTest, M5FromBases) {
  const Matroid m = M5();
  EXPECT_EQ(m.rank(), 3);
  EXPECT_EQ(m.bases().size(), 8u);
  EXPECT_EQ(m.Rank(S("123")), 2);
  EXPECT_EQ(m.Rank(S("345")), 3);
  EXPECT_EQ(m.Rank(ElementSet()), 0);
  EXPECT_TRUE(m.IsIndependent(S("23")));
  EXPECT_FALSE(m.IsIndependent(S("123")));
  EXPECT_TRUE(m.IsIndependent(ElementSet()));
  EXPECT_EQ(m.Circuits(), (std::vector<ElementSet>{S("123"), S("145"), S("2345")}));
}

TEST(MatroidTest, DuplicatesAreRemovedAndBasesSorted) {
  const Matroid m = Matroid::FromBases(3, {S("23"), S("12"), S("23"), S("13")});
  ASSERT_EQ(m.bases().size(), 3u);
  EXPECT_EQ(m.bases()[0], S("12"));
  EXPECT_EQ(m, Matroid::Uniform(2, 3));
}

TEST(MatroidTest, LoopOnlyMatroid) {
  const Matroid m = Matroid::FromBases(1, {ElementSet()});
  EXPECT_EQ(m.rank(), 0);
  EXPECT_EQ(m.Circuits(), (std::vector<ElementSet>{S("1")}));
}

TEST(MatroidTest, ConstructionErrors) {
  EXPECT_EQ(CodeOf([] { Matroid::FromBases(3, {}); }), ErrorCode::kEmptyBases);
  EXPECT_EQ(CodeOf([] { Matroid::FromBases(2, {S("1"), S("12")}); }),
            ErrorCode::kUnequalCardinality);
  EXPECT_EQ(CodeOf([] { Matroid::FromBases(4, {S("12"), S("34")}); }),
            ErrorCode::kExchangeAxiomViolated);
  EXPECT_EQ(CodeOf([] { Matroid::FromBases(3, {S("14")}); }), ErrorCode::kElementOutOfRange);
  EXPECT_EQ(CodeOf([] { Matroid::Uniform(4, 3); }), ErrorCode::kRankOutOfRange);
  EXPECT_EQ(CodeOf([] { Matroid::Uniform(-1, 3); }), ErrorCode::kRankOutOfRange);
  EXPECT_EQ(CodeOf([] { Matroid::Graphic(3, {}); }), ErrorCode::kNoEdges);
  EXPECT_EQ(CodeOf([] { Matroid::LinearOverPrimeField(4, {{1, 0}}); }), ErrorCode::kNotPrime);
  EXPECT_EQ(CodeOf([] { Matroid::LinearOverPrimeField(17, {{1, 0}}); }), ErrorCode::kNotPrime);
}

TEST(MatroidTest, ExchangeViolationNamesAWitness) {
  const std::vector<ElementSet> bases{S("12"), S("34")};
  const auto v = FindExchangeViolation(bases);
  ASSERT_TRUE(v.has_value());
  EXPECT_TRUE(v->a_basis.Contains(v->element));
  EXPECT_FALSE(v->b_basis.Contains(v->element));
}

TEST(MatroidTest, Uniform) {
  EXPECT_EQ(Matroid::Uniform(2, 4).bases().size(), 6u);
  EXPECT_EQ(Matroid::Uniform(3, 5).bases().size(), 10u);
  const Matroid u03 = Matroid::Uniform(0, 3);
  ASSERT_EQ(u03.bases().size(), 1u);
  EXPECT_TRUE(u03.bases()[0].empty());
  EXPECT_EQ(Matroid::Uniform(2, 4).Circuits().size(), 4u);
  EXPECT_TRUE(Matroid::Uniform(3, 3).Circuits().empty());
}

TEST(MatroidTest, Graphic) {
  const Matroid k4 = Matroid::Graphic(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  EXPECT_EQ(k4.bases().size(), 16u);  // Cayley: 4^2
  const Matroid triangle = Matroid::Graphic(3, {{1, 2}, {2, 3}, {1, 3}});
  EXPECT_EQ(triangle.bases().size(), 3u);
  EXPECT_EQ(triangle.Circuits(), (std::vector<ElementSet>{S("123")}));
  const Matroid path = Matroid::Graphic(3, {{1, 2}, {2, 3}});
  ASSERT_EQ(path.bases().size(), 1u);
  EXPECT_EQ(path.bases()[0], S("12"));
  // A self-loop edge is a matroid loop.
  const Matroid loop = Matroid::Graphic(2, {{1, 1}, {1, 2}});
  EXPECT_EQ(loop.bases().size(), 1u);
  EXPECT_EQ(loop.bases()[0], S("2"));
}

TEST(MatroidTest, LinearRealizationOfM5) {
  // Points (0,0), (1,0), (2,0), (0,1), (0,2), homogenized.
  const Matroid m =
      Matroid::LinearOverPrimeField(7, {{0, 1, 2, 0, 0}, {0, 0, 0, 1, 2}, {1, 1, 1, 1, 1}});
  EXPECT_EQ(m, M5());
  EXPECT_EQ(m.provenance(), Provenance::kLinear);
}

TEST(MatroidTest, LinearSmallCases) {
  const Matroid id = Matroid::LinearOverPrimeField(5, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  ASSERT_EQ(id.bases().size(), 1u);
  EXPECT_EQ(id.bases()[0], S("123"));
  const Matroid zero_column = Matroid::LinearOverPrimeField(3, {{1, 0, 1}, {0, 0, 1}});
  for (ElementSet b : zero_column.bases()) EXPECT_FALSE(b.Contains(2));
  // Over GF(2) the column (1,1) is dependent on the two unit vectors.
  const Matroid gf2 = Matroid::LinearOverPrimeField(2, {{1, 0, 1}, {0, 1, 1}});
  EXPECT_EQ(gf2, Matroid::Uniform(2, 3));
  EXPECT_EQ(Matroid::LinearOverPrimeField(3, {{1, 0, 1, 1}, {0, 1, 1, 2}}), Matroid::Uniform(2, 4));
}

TEST(MatroidTest, Duality) {
  const Matroid m = M5();
  const Matroid d = m.Dual();
  EXPECT_EQ(d.rank(), 2);
  for (ElementSet b : m.bases()) EXPECT_TRUE(d.IsBasis(m.ground() - b));
  EXPECT_EQ(d.Dual(), m);
  EXPECT_EQ(Matroid::Uniform(2, 4).Dual(), Matroid::Uniform(2, 4));
  EXPECT_EQ(Matroid::Uniform(0, 3).Dual(), Matroid::Uniform(3, 3));
  EXPECT_EQ(m.Cocircuits(), d.Circuits());
}

TEST(MatroidTest, FundamentalCircuit) {
  const Matroid m = M5();
  EXPECT_EQ(m.FundamentalCircuit(S("345"), 1), S("145"));
  EXPECT_EQ(m.FundamentalCircuit(S("345"), 2), S("2345"));
  EXPECT_EQ(Matroid::Uniform(2, 4).FundamentalCircuit(S("34"), 1), S("134"));
  EXPECT_EQ(CodeOf([&] { m.FundamentalCircuit(S("123"), 4); }), ErrorCode::kNotABasis);
  EXPECT_EQ(CodeOf([&] { m.FundamentalCircuit(S("345"), 3); }), ErrorCode::kElementInBasis);
}

TEST(MatroidTest, Relabel) {
  // Reversing 1..5 maps the circuits 123, 145 to 345, 125.
  const Matroid r = M5().Relabel({5, 4, 3, 2, 1});
  EXPECT_EQ(r.Circuits(), (std::vector<ElementSet>{S("1234"), S("125"), S("345")}));
}

TEST(MatroidTest, CircuitsMatchBruteForceOnCorpus) {
  for (const auto& [name, m] : testing::Corpus()) {
    EXPECT_EQ(m.Circuits(), oracle::Circuits(m)) << name;
    EXPECT_EQ(m.Cocircuits(), oracle::Circuits(m.Dual())) << name;
    EXPECT_EQ(m.IndependentSets().size(), oracle::IndependentCount(m)) << name;
    for (ElementSet b : m.bases()) {
      for (int e : m.ground() - b) {
        const ElementSet c = m.FundamentalCircuit(b, e);
        int inside = 0;
        for (ElementSet circuit : oracle::Circuits(m)) {
          if (circuit.IsSubsetOf(b.With(e))) ++inside;
        }
        EXPECT_EQ(inside, 1) << name;
        EXPECT_TRUE(c.Contains(e));
      }
    }
  }
}

TEST(MatroidTest, RankIsMonotoneAndSubmodular) {
  for (const auto& [name, m] : testing::Corpus()) {
    if (m.ground_size() > 7) continue;
    const auto all = Subsets(m.ground());
    for (ElementSet a : all) {
      EXPECT_EQ(m.Rank(a), oracle::RankOf(oracle::BaseMasks(m), a.mask()));
      for (ElementSet b : all) {
        if (a.IsSubsetOf(b)) {
          EXPECT_LE(m.Rank(a), m.Rank(b)) << name;
        }
        EXPECT_LE(m.Rank(a | b) + m.Rank(a & b), m.Rank(a) + m.Rank(b)) << name;
      }
    }
  }
}

TEST(MatroidTest, CopiesShareTheLazyCache) {
  const Matroid m = M5();
  const Matroid copy = m;
  EXPECT_EQ(&m.Circuits(), &copy.Circuits());
}

}  // namespace
}  // namespace activita
