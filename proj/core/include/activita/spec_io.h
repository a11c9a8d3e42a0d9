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

#ifndef ACTIVITA_SPEC_IO_H_
#define ACTIVITA_SPEC_IO_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "activita/matroid.h"

namespace activita {

// Builds a matroid from a JSON spec:
//   {"type":"bases","n":5,"bases":["345","135",...]}
//   {"type":"uniform","r":2,"n":4}
//   {"type":"graphic","vertices":4,"edges":[[1,2],...]}
//   {"type":"linear","p":7,"matrix":[[...],...]}
//   {"type":"dual","of":<spec>}
// Subsets are strings in FormatSet notation or arrays of integers.
// Malformed input raises Error(kParseError) naming the line or field;
// construction errors from Matroid propagate unchanged.
Matroid ParseMatroidSpec(std::string_view text);
Matroid LoadMatroidSpec(const std::filesystem::path& path);

// {"type":"bases",...} spec of an arbitrary matroid.
std::string MatroidToSpec(const Matroid& m);

struct CorpusEntry {
  std::string name;
  std::string spec;
};

// M5, its dual, U(1,3), U(2,4), U(3,5), the graphic matroid of K4 and of a
// triangle with a pendant edge.
std::vector<CorpusEntry> BuiltinCorpus();
// Every *.json file of `dir`, sorted by file name; the name is the stem.
std::vector<CorpusEntry> CorpusFromDirectory(const std::filesystem::path& dir);

}  // namespace activita

#endif  // ACTIVITA_SPEC_IO_H_
