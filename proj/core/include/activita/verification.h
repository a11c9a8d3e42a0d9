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

#ifndef ACTIVITA_VERIFICATION_H_
#define ACTIVITA_VERIFICATION_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "activita/matroid.h"

namespace activita {

struct VerifyOptions {
  // Linear extensions per poset: all of them when there are at most `cap`,
  // otherwise `cap` samples drawn from `seed`.
  uint64_t cap = 200;
  uint64_t seed = 0;
  // Checks quantified over all pairs or triples of independent sets
  // (lattice laws) only run up to this ground set size.
  int exhaustive_ground_limit = 6;
};

struct Finding {
  std::string matroid;
  std::string check;
  bool pass = false;
  std::string detail;
};

// Runs the whole theorem suite on one matroid. Findings come out in a fixed
// order; a check that throws is reported as failed with the error message.
std::vector<Finding> VerifyMatroid(std::string_view name, const Matroid& m,
                                   const VerifyOptions& options = {});

bool AllPass(const std::vector<Finding>& findings);

}  // namespace activita

#endif  // ACTIVITA_VERIFICATION_H_
