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

#include "activita/spec_io.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "activita/error.h"
#include "json.hpp"

namespace activita {

namespace {

using nlohmann::json;

[[noreturn]] void FieldError(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::kParseError, "field '" + field + "': " + what);
}

const json& Require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) {
    FieldError(path + key, "missing");
  }
  return obj.at(key);
}

int64_t RequireInt(const json& obj, const std::string& key, const std::string& path) {
  const json& v = Require(obj, key, path);
  if (!v.is_number_integer()) FieldError(path + key, "expected an integer");
  return v.get<int64_t>();
}

ElementSet SubsetFromJson(const json& v, int n, const std::string& field) {
  try {
    if (v.is_string()) return ParseSet(v.get<std::string>(), n);
    if (v.is_array()) {
      ElementSet s;
      for (const json& e : v) {
        if (!e.is_number_integer()) FieldError(field, "expected integers");
        const int64_t x = e.get<int64_t>();
        if (x < 1 || x > n) FieldError(field, "element " + std::to_string(x) + " out of range");
        s = s.With(static_cast<int>(x));
      }
      return s;
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParseError) throw;
    FieldError(field, e.what());
  }
  FieldError(field, "expected a subset string or integer array");
}

Matroid FromJson(const json& spec, const std::string& path) {
  if (!spec.is_object()) FieldError(path.empty() ? "<root>" : path, "expected an object");
  const json& type = Require(spec, "type", path);
  if (!type.is_string()) FieldError(path + "type", "expected a string");
  const std::string kind = type.get<std::string>();

  if (kind == "bases") {
    const int64_t n = RequireInt(spec, "n", path);
    if (n < 1 || n > kMaxGroundSize) FieldError(path + "n", "must be in 1..64");
    const json& list = Require(spec, "bases", path);
    if (!list.is_array()) FieldError(path + "bases", "expected an array");
    std::vector<ElementSet> bases;
    for (size_t i = 0; i < list.size(); ++i) {
      bases.push_back(
          SubsetFromJson(list[i], static_cast<int>(n), path + "bases[" + std::to_string(i) + "]"));
    }
    return Matroid::FromBases(static_cast<int>(n), std::move(bases));
  }
  if (kind == "uniform") {
    const int64_t r = RequireInt(spec, "r", path);
    const int64_t n = RequireInt(spec, "n", path);
    if (n < 1 || n > kMaxGroundSize) FieldError(path + "n", "must be in 1..64");
    return Matroid::Uniform(static_cast<int>(r), static_cast<int>(n));
  }
  if (kind == "graphic") {
    const int64_t vertices = RequireInt(spec, "vertices", path);
    const json& list = Require(spec, "edges", path);
    if (!list.is_array()) FieldError(path + "edges", "expected an array");
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < list.size(); ++i) {
      const json& e = list[i];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        FieldError(path + "edges[" + std::to_string(i) + "]", "expected [u, v]");
      }
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Matroid::Graphic(static_cast<int>(vertices), edges);
  }
  if (kind == "linear") {
    const int64_t p = RequireInt(spec, "p", path);
    const json& matrix = Require(spec, "matrix", path);
    if (!matrix.is_array()) FieldError(path + "matrix", "expected an array of rows");
    std::vector<std::vector<int64_t>> rows;
    for (size_t i = 0; i < matrix.size(); ++i) {
      const std::string field = path + "matrix[" + std::to_string(i) + "]";
      if (!matrix[i].is_array()) FieldError(field, "expected a row");
      std::vector<int64_t> row;
      for (const json& v : matrix[i]) {
        if (!v.is_number_integer()) FieldError(field, "expected integers");
        row.push_back(v.get<int64_t>());
      }
      rows.push_back(std::move(row));
    }
    return Matroid::LinearOverPrimeField(static_cast<int>(p), rows);
  }
  if (kind == "dual") {
    return FromJson(Require(spec, "of", path), path + "of.").Dual();
  }
  FieldError(path + "type", "unknown matroid type \"" + kind + "\"");
}

std::string LineColumn(std::string_view text, size_t byte) {
  size_t line = 1, column = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

Matroid ParseMatroidSpec(std::string_view text) {
  json spec;
  try {
    spec = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError,
                LineColumn(text, e.byte == 0 ? 0 : e.byte - 1) + ": malformed JSON");
  }
  return FromJson(spec, "");
}

Matroid LoadMatroidSpec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kParseError, "cannot read " + path.string());
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseMatroidSpec(buffer.str());
}

std::string MatroidToSpec(const Matroid& m) {
  json bases = json::array();
  for (ElementSet b : m.bases()) bases.push_back(FormatSet(b, m.ground_size()));
  return json{{"type", "bases"}, {"n", m.ground_size()}, {"bases", bases}}.dump();
}

std::vector<CorpusEntry> BuiltinCorpus() {
  const std::string m5 =
      R"({"type":"bases","n":5,"bases":["345","135","245","235","125","134","234","124"]})";
  return {
      {"M5", m5},
      {"dual-M5", R"({"type":"dual","of":)" + m5 + "}"},
      {"U(1,3)", R"({"type":"uniform","r":1,"n":3})"},
      {"U(2,4)", R"({"type":"uniform","r":2,"n":4})"},
      {"U(3,5)", R"({"type":"uniform","r":3,"n":5})"},
      {"K4", R"({"type":"graphic","vertices":4,"edges":[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]})"},
      {"triangle-pendant", R"({"type":"graphic","vertices":4,"edges":[[1,2],[2,3],[1,3],[3,4]]})"},
  };
}

std::vector<CorpusEntry> CorpusFromDirectory(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (const auto& f : files) {
    std::ifstream in(f);
    std::stringstream buffer;
    buffer << in.rdbuf();
    out.push_back({f.stem().string(), buffer.str()});
  }
  return out;
}

}  // namespace activita
