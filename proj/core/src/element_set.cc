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

#include "activita/element_set.h"

#include <cctype>

#include "activita/error.h"

namespace activita {

std::string FormatSet(ElementSet s, int n) {
  std::string out;
  for (int e : s) {
    if (n > 9 && !out.empty()) out += ',';
    out += std::to_string(e);
  }
  return out;
}

ElementSet ParseSet(std::string_view text, int n) {
  ElementSet s;
  auto add = [&](int e) {
    if (e < 1 || e > n) {
      throw Error(ErrorCode::kElementOutOfRange, "element " + std::to_string(e) + " outside 1.." +
                                                     std::to_string(n) + " in \"" +
                                                     std::string(text) + "\"");
    }
    s = s.With(e);
  };
  const bool separated = n > 9 || text.find(',') != std::string_view::npos;
  if (!separated) {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw Error(ErrorCode::kParseError, "bad subset \"" + std::string(text) + "\"");
      }
      add(c - '0');
    }
    return s;
  }
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    if (token.empty()) {
      if (text.empty()) break;
      throw Error(ErrorCode::kParseError, "empty item in \"" + std::string(text) + "\"");
    }
    int value = 0;
    for (char c : token) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || value > 1000) {
        throw Error(ErrorCode::kParseError, "bad subset \"" + std::string(text) + "\"");
      }
      value = value * 10 + (c - '0');
    }
    add(value);
    pos = comma + 1;
  }
  return s;
}

std::vector<ElementSet> Subsets(ElementSet s) {
  std::vector<ElementSet> out;
  const uint64_t m = s.mask();
  uint64_t sub = 0;
  // Enumerates submasks in increasing order.
  while (true) {
    out.push_back(ElementSet::FromMask(sub));
    if (sub == m) break;
    sub = (sub - m) & m;
  }
  return out;
}

}  // namespace activita
