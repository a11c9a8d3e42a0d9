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

#include "activita/verification.h"

#include <gtest/gtest.h>

#include <set>

#include "../fixtures.h"

namespace activita {
namespace {

TEST(VerificationTest, CorpusPassesEveryCheck) {
  for (const auto& [name, m] : testing::Corpus()) {
    const std::vector<Finding> findings = VerifyMatroid(name, m);
    EXPECT_TRUE(AllPass(findings)) << name;
    for (const Finding& f : findings) {
      EXPECT_TRUE(f.pass) << f.matroid << " " << f.check << ": " << f.detail;
      EXPECT_EQ(f.matroid, name);
    }
  }
}

TEST(VerificationTest, FindingsAreDeterministic) {
  const Matroid m = testing::M5();
  VerifyOptions options;
  options.seed = 11;
  const auto a = VerifyMatroid("M5", m, options);
  const auto b = VerifyMatroid("M5", m, options);
  ASSERT_EQ(a.size(), b.size());
  std::set<std::string> names;
  for (size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].check, b[i].check);
    EXPECT_EQ(a[i].detail, b[i].detail);
    names.insert(a[i].check);
  }
  EXPECT_EQ(names.size(), a.size());
  for (const char* required : {"poset-axioms", "crapo-partition-subsets", "shelling-extint",
                               "shelling-flip", "shelling-nbc", "boolean-intervals",
                               "flip-involution", "tutte-identities", "lattice-laws"}) {
    EXPECT_TRUE(names.contains(required)) << required;
  }
}

TEST(VerificationTest, LargerGroundSetsSkipTripleChecks) {
  VerifyOptions options;
  options.exhaustive_ground_limit = 3;
  options.cap = 5;
  for (const Finding& f : VerifyMatroid("M5", testing::M5(), options)) {
    EXPECT_TRUE(f.pass) << f.check;
    if (f.check == "lattice-laws") {
      EXPECT_NE(f.detail.find("skipped"), std::string::npos);
    }
  }
}

TEST(VerificationTest, LinearAndRankZeroMatroids) {
  const Matroid linear = Matroid::LinearOverPrimeField(5, {{1, 0, 1, 2, 0}, {0, 1, 1, 3, 0}});
  EXPECT_TRUE(AllPass(VerifyMatroid("linear", linear)));
  EXPECT_TRUE(AllPass(VerifyMatroid("U(0,2)", Matroid::Uniform(0, 2))));
  EXPECT_TRUE(AllPass(VerifyMatroid("U(4,4)", Matroid::Uniform(4, 4))));
}

}  // namespace
}  // namespace activita
