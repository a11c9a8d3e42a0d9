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

#ifndef ACTIVITA_TESTS_FIXTURES_H_
#define ACTIVITA_TESTS_FIXTURES_H_

#include <string>
#include <vector>

#include "activita/element_set.h"
#include "activita/matroid.h"
#include "activita/spec_io.h"

namespace activita::testing {

// The rank-3 matroid of five points in the plane with 123 and 145 collinear.
inline Matroid M5() {
  return Matroid::FromBases(
      5, {ElementSet::Of({3, 4, 5}), ElementSet::Of({1, 3, 5}), ElementSet::Of({2, 4, 5}),
          ElementSet::Of({2, 3, 5}), ElementSet::Of({1, 2, 5}), ElementSet::Of({1, 3, 4}),
          ElementSet::Of({2, 3, 4}), ElementSet::Of({1, 2, 4})});
}

// Subset in digit notation, e.g. S("245"); S("") is empty.
inline ElementSet S(const std::string& digits, int n = 9) { return ParseSet(digits, n); }

inline std::vector<std::pair<std::string, Matroid>> Corpus() {
  std::vector<std::pair<std::string, Matroid>> out;
  for (const CorpusEntry& e : BuiltinCorpus()) out.emplace_back(e.name, ParseMatroidSpec(e.spec));
  return out;
}

}  // namespace activita::testing

#endif  // ACTIVITA_TESTS_FIXTURES_H_
