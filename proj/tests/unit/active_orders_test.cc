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

#include <gtest/gtest.h>

#include <set>

#include "../fixtures.h"
#include "../oracles.h"
#include "activita/error.h"

namespace activita {
namespace {

using testing::M5;
using testing::S;

using CoverSet = std::set<std::pair<std::string, std::string>>;

CoverSet Covers(const Poset& p, int n) {
  CoverSet out;
  for (const auto& [lo, hi] : p.covers()) {
    out.emplace(FormatSet(p.element(lo), n), FormatSet(p.element(hi), n));
  }
  return out;
}

// Transitive reduction computed independently from the relation.
CoverSet CoversByDefinition(const Poset& p, int n) {
  CoverSet out;
  for (int a = 0; a < p.size(); ++a) {
    for (int b = 0; b < p.size(); ++b) {
      if (!p.Less(a, b)) continue;
      bool between = false;
      for (int c = 0; c < p.size() && !between; ++c) between = p.Less(a, c) && p.Less(c, b);
      if (!between) out.emplace(FormatSet(p.element(a), n), FormatSet(p.element(b), n));
    }
  }
  return out;
}

const CoverSet kM5Covers = {{"345", "135"}, {"345", "245"}, {"135", "125"}, {"135", "134"},
                            {"245", "235"}, {"235", "125"}, {"235", "234"}, {"125", "124"},
                            {"134", "124"}, {"234", "124"}};

TEST(ActiveOrdersTest, M5ExtIntCovers) {
  const Poset p = BuildPoset(M5(), PosetKind::kExtIntBases);
  EXPECT_EQ(Covers(p, 5), kM5Covers);
}

const CoverSet kM5ExtCovers = {{"345", "134"}, {"345", "234"}, {"135", "134"}, {"135", "125"},
                               {"245", "234"}, {"235", "125"}, {"235", "234"}, {"134", "124"},
                               {"125", "124"}, {"234", "124"}};
const CoverSet kM5IntCovers = {{"345", "135"}, {"345", "245"}, {"135", "125"},
                               {"135", "134"}, {"245", "125"}, {"245", "235"},
                               {"125", "124"}, {"134", "124"}, {"235", "234"}};

TEST(ActiveOrdersTest, M5ExternalAndInternalCovers) {
  const Matroid m = M5();
  const Poset ext = BuildPoset(m, PosetKind::kExtBases);
  const Poset in = BuildPoset(m, PosetKind::kIntBases);
  EXPECT_EQ(Covers(ext, 5), kM5ExtCovers);
  EXPECT_EQ(Covers(in, 5), kM5IntCovers);
  const Poset both = BuildPoset(m, PosetKind::kExtIntBases);
  for (const Poset* p : {&ext, &in}) {
    EXPECT_TRUE(p->IsPartialOrder());
    EXPECT_EQ(Covers(*p, 5), CoversByDefinition(*p, 5));
    // ext/int refines both orders.
    for (int a = 0; a < p->size(); ++a) {
      for (int b = 0; b < p->size(); ++b) {
        if (p->Leq(a, b)) {
          EXPECT_TRUE(both.Leq(both.IndexOf(p->element(a)), both.IndexOf(p->element(b))));
        }
      }
    }
  }
}

TEST(ActiveOrdersTest, CompareBasesExamples) {
  const Matroid m = M5();
  EXPECT_TRUE(CompareBases(m, BasisOrder::kExtInt, S("345"), S("135")));
  EXPECT_FALSE(CompareBases(m, BasisOrder::kExtInt, S("135"), S("345")));
  EXPECT_FALSE(CompareBases(m, BasisOrder::kExtInt, S("134"), S("234")));
  EXPECT_FALSE(CompareBases(m, BasisOrder::kExtInt, S("234"), S("134")));
  for (BasisOrder o : {BasisOrder::kExternal, BasisOrder::kInternal, BasisOrder::kExtInt}) {
    for (ElementSet b : m.bases()) EXPECT_TRUE(CompareBases(m, o, b, b));
  }
  try {
    CompareBases(m, BasisOrder::kExtInt, S("123"), S("345"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotABasis);
  }
}

TEST(ActiveOrdersTest, IndependentSetExamples) {
  const Matroid m = M5();
  EXPECT_FALSE(LeqExtIntInd(m, S("23"), S("14")));
  EXPECT_FALSE(LeqExtIntInd(m, S("14"), S("23")));
  EXPECT_FALSE(LeqExtIntInd(m, S("3"), S("45")));
  EXPECT_FALSE(LeqExtIntInd(m, S("45"), S("3")));
  EXPECT_TRUE(LeqExtIntInd(m, S("5"), S("45")));
  EXPECT_TRUE(LeqFlipInd(m, S("45"), S("5")));
  EXPECT_TRUE(LeqFlipInd(m, S("345"), S("135")));
  EXPECT_TRUE(LeqFlipInd(m, S("2"), S("2")));
  try {
    LeqExtIntInd(m, S("123"), S("1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotIndependent);
  }
}

TEST(ActiveOrdersTest, M5IndependentPoset) {
  const Poset p = BuildPoset(M5(), PosetKind::kExtIntInd);
  EXPECT_EQ(p.size(), 24);
  EXPECT_TRUE(p.IsPartialOrder());
  // The block of 245 is the interval (345, 245].
  const auto interval = BooleanInterval(M5(), S("345"), S("245"));
  EXPECT_EQ(std::set<ElementSet>(interval.begin(), interval.end()),
            (std::set<ElementSet>{S("2"), S("24"), S("25"), S("245")}));
}

TEST(ActiveOrdersTest, PosetsAgreeAcrossRoutes) {
  for (const auto& [name, m] : testing::Corpus()) {
    const ActivityTable table(m);
    const Poset bases = BuildPoset(table, PosetKind::kExtIntBases);
    const Poset ind = BuildPoset(table, PosetKind::kExtIntInd);
    for (int a = 0; a < bases.size(); ++a) {
      for (int b = 0; b < bases.size(); ++b) {
        EXPECT_EQ(bases.Leq(a, b),
                  ind.Leq(ind.IndexOf(bases.element(a)), ind.IndexOf(bases.element(b))))
            << name;
      }
    }
    for (int i = 0; i < ind.size(); ++i) {
      for (int k = 0; k < ind.size(); ++k) {
        EXPECT_EQ(ind.Leq(i, k), LeqExtIntInd(m, ind.element(i), ind.element(k))) << name;
      }
    }
    for (PosetKind kind : {PosetKind::kExtBases, PosetKind::kIntBases, PosetKind::kExtIntBases,
                           PosetKind::kExtIntInd, PosetKind::kFlipInd, PosetKind::kNbcExtInt}) {
      const Poset p = BuildPoset(table, kind);
      EXPECT_TRUE(p.IsPartialOrder()) << name << " " << PosetKindName(kind);
      EXPECT_EQ(Covers(p, m.ground_size()), CoversByDefinition(p, m.ground_size())) << name;
    }
  }
}

TEST(ActiveOrdersTest, SingleElementPoset) {
  const Matroid m = Matroid::Uniform(1, 1);
  for (PosetKind kind : {PosetKind::kExtBases, PosetKind::kIntBases, PosetKind::kExtIntBases}) {
    EXPECT_EQ(BuildPoset(m, kind).size(), 1);
  }
}

TEST(ActiveOrdersTest, PosetKindNames) {
  for (PosetKind kind : {PosetKind::kExtBases, PosetKind::kIntBases, PosetKind::kExtIntBases,
                         PosetKind::kExtIntInd, PosetKind::kFlipInd, PosetKind::kNbcExtInt}) {
    EXPECT_EQ(ParsePosetKind(PosetKindName(kind)), kind);
  }
  EXPECT_FALSE(ParsePosetKind("bogus").has_value());
}

Poset Chain(int k) {
  std::vector<ElementSet> elems;
  for (int i = 1; i <= k; ++i) elems.push_back(ElementSet::Singleton(i));
  return Poset(elems, [](ElementSet a, ElementSet b) { return a.Max() <= b.Max(); });
}

Poset Antichain(int k) {
  std::vector<ElementSet> elems;
  for (int i = 1; i <= k; ++i) elems.push_back(ElementSet::Singleton(i));
  return Poset(elems, [](ElementSet a, ElementSet b) { return a == b; });
}

TEST(LinearExtensionTest, ChainAndAntichain) {
  EXPECT_EQ(CountLinearExtensions(Chain(3), 100), 1u);
  EXPECT_EQ(LinearExtensions(Chain(3), 100, 0).size(), 1u);
  EXPECT_EQ(CountLinearExtensions(Antichain(3), 100), 6u);
  const auto all = LinearExtensions(Antichain(3), 100, 0);
  ASSERT_EQ(all.size(), 6u);
  EXPECT_EQ(all.front().order, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(all.back().order, (std::vector<int>{2, 1, 0}));
  EXPECT_EQ(CountLinearExtensions(Antichain(5), 10), 11u);  // limit exceeded
}

std::vector<std::vector<bool>> StrictRelation(const Poset& p) {
  std::vector<std::vector<bool>> less(p.size(), std::vector<bool>(p.size()));
  for (int i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p.size(); ++j) less[i][j] = p.Less(i, j);
  }
  return less;
}

TEST(LinearExtensionTest, CountsMatchDynamicProgramming) {
  for (const auto& [name, m] : testing::Corpus()) {
    for (PosetKind kind : {PosetKind::kExtIntBases, PosetKind::kExtIntInd, PosetKind::kNbcExtInt}) {
      const Poset p = BuildPoset(m, kind);
      if (p.size() > 26) continue;
      const uint64_t dp = oracle::LinearExtensionCount(p.size(), StrictRelation(p));
      const uint64_t limit = 100000;
      const uint64_t counted = CountLinearExtensions(p, limit);
      if (dp <= limit) {
        EXPECT_EQ(counted, dp) << name << " " << PosetKindName(kind);
      } else {
        EXPECT_EQ(counted, limit + 1) << name;
      }
    }
  }
}

TEST(LinearExtensionTest, M5BasesEnumeratedExhaustively) {
  const Poset p = BuildPoset(M5(), PosetKind::kExtIntBases);
  const auto all = LinearExtensions(p, 1000000, 0);
  EXPECT_EQ(all.size(), oracle::LinearExtensionCount(p.size(), StrictRelation(p)));
  EXPECT_EQ(all, LinearExtensions(p, 1000000, 99));  // seed irrelevant when exhaustive
  std::set<std::vector<int>> distinct;
  for (const auto& e : all) {
    EXPECT_TRUE(IsLinearExtension(p, e));
    distinct.insert(e.order);
  }
  EXPECT_EQ(distinct.size(), all.size());
}

TEST(LinearExtensionTest, SamplingIsSeededAndValid) {
  const Poset p = BuildPoset(Matroid::Graphic(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}),
                             PosetKind::kExtIntInd);
  const auto a = LinearExtensions(p, 50, 7);
  const auto b = LinearExtensions(p, 50, 7);
  const auto c = LinearExtensions(p, 50, 8);
  ASSERT_EQ(a.size(), 50u);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  for (const auto& e : a) EXPECT_TRUE(IsLinearExtension(p, e));
  EXPECT_EQ(RandomLinearExtension(p, 3), RandomLinearExtension(p, 3));
  EXPECT_THROW(LinearExtensions(p, 0, 0), Error);
}

TEST(LatticeTest, MeetJoinExamples) {
  const Matroid m = M5();
  EXPECT_EQ(MeetJoinInd(m, S("3"), S("45")), (MeetJoin{ElementSet(), S("345")}));
  EXPECT_EQ(MeetJoinInd(m, S("23"), S("14")).join, S("124"));
  for (ElementSet i : m.IndependentSets()) {
    EXPECT_EQ(MeetJoinInd(m, i, i), (MeetJoin{i, i}));
  }
}

TEST(LatticeTest, BoundsAreGreatestAndLeast) {
  for (const auto& [name, m] : testing::Corpus()) {
    if (m.ground_size() > 6) continue;
    const ActivityTable table(m);
    const Poset bases = BuildPoset(table, PosetKind::kExtIntBases);
    const Poset p = BuildPoset(table, PosetKind::kExtIntInd);
    for (int i = 0; i < p.size(); ++i) {
      for (int k = 0; k < p.size(); ++k) {
        const MeetJoin mj = MeetJoinInd(table, bases, p.element(i), p.element(k));
        // Brute force: the unique maximal common lower bound.
        std::vector<int> lower, upper;
        for (int z = 0; z < p.size(); ++z) {
          if (p.Leq(z, i) && p.Leq(z, k)) lower.push_back(z);
          if (p.Leq(i, z) && p.Leq(k, z)) upper.push_back(z);
        }
        int glb = -1, lub = -1;
        for (int z : lower) {
          if (std::all_of(lower.begin(), lower.end(), [&](int w) { return p.Leq(w, z); })) glb = z;
        }
        for (int z : upper) {
          if (std::all_of(upper.begin(), upper.end(), [&](int w) { return p.Leq(z, w); })) lub = z;
        }
        ASSERT_GE(glb, 0) << name;
        ASSERT_GE(lub, 0) << name;
        EXPECT_EQ(mj.meet, p.element(glb)) << name;
        EXPECT_EQ(mj.join, p.element(lub)) << name;
      }
    }
  }
}

TEST(BooleanIntervalTest, Examples) {
  const Matroid m = M5();
  auto a = BooleanInterval(m, S("345"), S("135"));
  EXPECT_EQ(std::set<ElementSet>(a.begin(), a.end()),
            (std::set<ElementSet>{S("1"), S("13"), S("15"), S("135")}));
  a = BooleanInterval(m, S("235"), S("234"));
  EXPECT_EQ(a, (std::vector<ElementSet>{S("234")}));
  try {
    BooleanInterval(m, S("345"), S("124"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotACover);
  }
}

TEST(FlipTest, Examples) {
  const Matroid m = M5();
  EXPECT_EQ(FlipInvolution(m, S("2")), S("245"));
  EXPECT_EQ(FlipInvolution(m, S("245")), S("2"));
  EXPECT_EQ(FlipInvolution(m, S("124")), S("124"));  // IA(124) = ∅
  for (const auto& [name, matroid] : testing::Corpus()) {
    std::set<ElementSet> image;
    for (ElementSet i : matroid.IndependentSets()) {
      const ElementSet f = FlipInvolution(matroid, i);
      EXPECT_EQ(FlipInvolution(matroid, f), i) << name;
      image.insert(f);
    }
    EXPECT_EQ(image.size(), matroid.IndependentSets().size()) << name;
  }
}

TEST(DotTest, M5CoversAndLabels) {
  const std::string dot = PosetToDot(BuildPoset(M5(), PosetKind::kExtIntBases), 5, "extint");
  size_t edges = 0;
  for (size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 1)) {
    ++edges;
  }
  EXPECT_EQ(edges, 10u);
  EXPECT_NE(dot.find("label=\"245\""), std::string::npos);
  const std::string ind = PosetToDot(BuildPoset(M5(), PosetKind::kExtIntInd), 5, "ind");
  EXPECT_NE(ind.find("label=\"∅\""), std::string::npos);
}

}  // namespace
}  // namespace activita
