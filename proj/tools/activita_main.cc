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

// activita: command-line front end for the matroid activity library.
//
// Exit codes: 0 ok, 1 a check failed, 2 usage or input error.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "activita/active_orders.h"
#include "activita/activity.h"
#include "activita/complexes.h"
#include "activita/error.h"
#include "activita/shelling.h"
#include "activita/spec_io.h"
#include "activita/tutte.h"
#include "activita/verification.h"
#include "json.hpp"

namespace {

using nlohmann::json;
using namespace activita;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Config {
  std::string spec_path;
  std::vector<std::string> spec_paths;
  std::string subset;
  std::string kind;
  std::string complex_kind = "augmented-ea";
  uint64_t seed = 0;
  std::optional<uint64_t> order_seed;
  uint64_t cap = 200;
  std::optional<std::string> dot;  // "" means stdout
  bool json = false;
  std::string report;
  bool with_corpus = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string Set(ElementSet s, int n) { return FormatSet(s, n); }

// Writes `text` to `path`, or to stdout when the path is empty.
void Emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

json FaceJson(const Face& f, int n) {
  return json{{"x", Set(f.x, n)}, {"y", Set(f.y, n)}, {"z", Set(f.z, n)}};
}

PosetKind RequirePosetKind(const std::string& name) {
  const auto kind = ParsePosetKind(name);
  if (!kind) throw UsageError("unknown order kind \"" + name + "\"");
  return *kind;
}

ComplexKind RequireComplexKind(const std::string& name) {
  const auto kind = ParseComplexKind(name);
  if (!kind) throw UsageError("unknown complex kind \"" + name + "\"");
  return *kind;
}

int RunActivity(const Config& c) {
  const Matroid m = LoadMatroidSpec(c.spec_path);
  const int n = m.ground_size();
  const ElementSet s = ParseSet(c.subset, n);
  const ActivityProfile p = ComputeActivityProfile(m, s);
  json out{{"subset", Set(s, n)},
           {"EA", Set(p.ea, n)},
           {"EP", Set(p.ep, n)},
           {"IA", Set(p.ia, n)},
           {"IP", Set(p.ip, n)}};
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int RunOrder(const Config& c) {
  const Matroid m = LoadMatroidSpec(c.spec_path);
  const int n = m.ground_size();
  const PosetKind kind = RequirePosetKind(c.kind.empty() ? "extint-bases" : c.kind);
  const Poset poset = BuildPoset(m, kind);
  if (c.dot) {
    Emit(*c.dot, PosetToDot(poset, n, PosetKindName(kind)));
    return kOk;
  }
  if (c.json) {
    json elements = json::array(), covers = json::array();
    for (ElementSet s : poset.elements()) elements.push_back(Set(s, n));
    for (const auto& [lo, hi] : poset.covers()) {
      covers.push_back({Set(poset.element(lo), n), Set(poset.element(hi), n)});
    }
    const uint64_t count = CountLinearExtensions(poset, c.cap);
    json out{{"kind", PosetKindName(kind)}, {"elements", elements}, {"covers", covers}};
    if (count <= c.cap) {
      out["linear_extensions"] = count;
    } else {
      out["linear_extensions"] = "more than " + std::to_string(c.cap);
    }
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  std::cout << PosetKindName(kind) << ": " << poset.size() << " elements, " << poset.covers().size()
            << " covers\n";
  for (const auto& [lo, hi] : poset.covers()) {
    std::cout << "  " << Set(poset.element(lo), n) << " < " << Set(poset.element(hi), n) << "\n";
  }
  return kOk;
}

int RunComplex(const Config& c) {
  const Matroid m = LoadMatroidSpec(c.spec_path);
  const int n = m.ground_size();
  const ComplexKind kind = RequireComplexKind(c.kind.empty() ? "augmented-ea" : c.kind);
  const SimplicialComplex complex = BuildComplex(m, kind);
  const FHVector fh = ComputeFHVector(complex);
  if (c.json) {
    json facets = json::array();
    for (const Facet& f : complex.facets()) {
      json entry = FaceJson(f.face, n);
      entry["I"] = Set(f.tag, n);
      facets.push_back(entry);
    }
    json out{{"kind", ComplexKindName(kind)},
             {"dimension", complex.dimension()},
             {"facets", facets},
             {"f", fh.f},
             {"h", fh.h}};
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  std::cout << ComplexKindName(kind) << ": " << complex.facets().size() << " facets, dimension "
            << complex.dimension() << "\n";
  for (const Facet& f : complex.facets()) {
    const std::string tag = Set(f.tag, n);
    std::cout << "  " << (tag.empty() ? "∅" : tag) << "\t" << FormatFace(f.face, n) << "\n";
  }
  auto line = [](const char* name, const std::vector<int64_t>& v) {
    std::cout << name << " =";
    for (int64_t x : v) std::cout << " " << x;
    std::cout << "\n";
  };
  line("f", fh.f);
  line("h", fh.h);
  return kOk;
}

// The order whose linear extensions are used to shell each complex.
PosetKind DefaultOrderFor(ComplexKind kind) {
  switch (kind) {
    case ComplexKind::kAugmentedEa:
      return PosetKind::kExtIntInd;
    case ComplexKind::kEa:
      return PosetKind::kExtIntBases;
    case ComplexKind::kNbc:
    case ComplexKind::kAugmentedNbc:
      return PosetKind::kNbcExtInt;
  }
  return PosetKind::kExtIntInd;
}

int RunShell(const Config& c) {
  const Matroid m = LoadMatroidSpec(c.spec_path);
  const int n = m.ground_size();
  const ComplexKind complex_kind = RequireComplexKind(c.complex_kind);
  const PosetKind order_kind =
      c.kind.empty() ? DefaultOrderFor(complex_kind) : RequirePosetKind(c.kind);
  const SimplicialComplex complex = BuildComplex(m, complex_kind);
  const Poset poset = BuildPoset(m, order_kind);
  const LinearExtension ext = RandomLinearExtension(poset, c.order_seed.value_or(c.seed));

  // Elements of the order that do not generate a facet (e.g. non-maximal
  // nbc sets for the nbc complex) are skipped.
  std::vector<ElementSet> tags;
  for (int idx : ext.order) {
    if (complex.FacetIndexByTag(poset.element(idx)) >= 0) tags.push_back(poset.element(idx));
  }
  if (tags.size() != complex.facets().size()) {
    throw UsageError("order " + std::string(PosetKindName(order_kind)) +
                     " does not index the facets of " + std::string(ComplexKindName(complex_kind)));
  }
  const ShellingReport report = VerifyShelling(complex, FacetOrderFromTags(complex, tags));

  json restrictions = json::array();
  for (size_t p = 0; p < report.restrictions.size(); ++p) {
    json entry = FaceJson(report.restrictions[p], n);
    entry["I"] = Set(tags[p], n);
    restrictions.push_back(entry);
  }
  json order = json::array();
  for (ElementSet t : tags) order.push_back(Set(t, n));
  json out{{"complex", ComplexKindName(complex_kind)},
           {"order_kind", PosetKindName(order_kind)},
           {"order", order},
           {"verdict", report.verdict},
           {"failing_pair", report.failing_pair
                                ? json{report.failing_pair->first, report.failing_pair->second}
                                : json(nullptr)},
           {"restrictions", restrictions},
           {"h", report.h},
           {"property_h", report.property_h},
           {"h_complex", report.h_complex}};
  if (!c.report.empty()) {
    Emit(c.report, out.dump(2) + "\n");
  } else {
    std::cout << out.dump(2) << "\n";
  }
  return report.verdict ? kOk : kCheckFailed;
}

int RunTutte(const Config& c) {
  const Matroid m = LoadMatroidSpec(c.spec_path);
  const BiPoly tutte = TutteByActivities(m);
  if (c.json) {
    json monomials = json::array();
    for (auto it = tutte.terms().rbegin(); it != tutte.terms().rend(); ++it) {
      monomials.push_back({{"q", it->first.first}, {"t", it->first.second}, {"c", it->second}});
    }
    std::cout << json{{"tutte", tutte.ToString()}, {"monomials", monomials}}.dump(2) << "\n";
  } else {
    std::cout << tutte.ToString() << "\n";
  }
  return kOk;
}

std::vector<CorpusEntry> Corpus() {
  std::vector<CorpusEntry> corpus = BuiltinCorpus();
  if (const char* dir = std::getenv("ACTIVITA_CORPUS_DIR"); dir != nullptr && *dir) {
    if (!std::filesystem::is_directory(dir)) {
      throw UsageError(std::string("ACTIVITA_CORPUS_DIR is not a directory: ") + dir);
    }
    for (CorpusEntry& e : CorpusFromDirectory(dir)) corpus.push_back(std::move(e));
  }
  return corpus;
}

int RunVerify(const Config& c) {
  std::vector<std::pair<std::string, Matroid>> targets;
  if (c.spec_paths.empty() || c.with_corpus) {
    for (const CorpusEntry& e : Corpus()) targets.emplace_back(e.name, ParseMatroidSpec(e.spec));
  }
  for (const std::string& path : c.spec_paths) {
    targets.emplace_back(std::filesystem::path(path).stem().string(), LoadMatroidSpec(path));
  }
  VerifyOptions options;
  options.cap = c.cap;
  options.seed = c.seed;
  std::vector<Finding> findings;
  for (const auto& [name, m] : targets) {
    for (Finding& f : VerifyMatroid(name, m, options)) {
      std::cout << (f.pass ? "PASS " : "FAIL ") << f.matroid << " " << f.check << ": " << f.detail
                << "\n";
      findings.push_back(std::move(f));
    }
  }
  const bool ok = AllPass(findings);
  if (!c.report.empty()) {
    json list = json::array();
    for (const Finding& f : findings) {
      list.push_back({{"matroid", f.matroid},
                      {"check", f.check},
                      {"status", f.pass ? "PASS" : "FAIL"},
                      {"detail", f.detail}});
    }
    Emit(c.report,
         json{{"cap", c.cap}, {"seed", c.seed}, {"ok", ok}, {"findings", list}}.dump(2) + "\n");
  }
  std::cout << (ok ? "all checks passed" : "some checks FAILED") << " (" << findings.size()
            << " findings)\n";
  return ok ? kOk : kCheckFailed;
}

int RunCorpus(const Config& c) {
  json list = json::array();
  for (const CorpusEntry& e : Corpus()) {
    const Matroid m = ParseMatroidSpec(e.spec);
    if (c.json) {
      list.push_back({{"name", e.name},
                      {"n", m.ground_size()},
                      {"rank", m.rank()},
                      {"bases", m.bases().size()},
                      {"spec", json::parse(e.spec)}});
    } else {
      std::cout << e.name << "\tn=" << m.ground_size() << " r=" << m.rank()
                << " bases=" << m.bases().size() << "\t" << e.spec << "\n";
    }
  }
  if (c.json) std::cout << list.dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matroid activities, active orders and shellings of activity complexes"};
  app.require_subcommand(1);
  Config c;

  auto* activity = app.add_subcommand("activity", "EA/EP/IA/IP of a subset, as JSON");
  activity->add_option("spec", c.spec_path, "matroid spec (JSON)")->required();
  activity->add_option("subset", c.subset, "subset, e.g. 245 or 1,10")->required();

  auto* order = app.add_subcommand("order", "active orders: covers, DOT or JSON");
  order->add_option("spec", c.spec_path, "matroid spec (JSON)")->required();
  order->add_option("--kind", c.kind,
                    "ext-bases|int-bases|extint-bases|extint-ind|flip-ind|nbc-extint");
  order->add_option("--dot", c.dot, "write a DOT digraph (to stdout without a path)")
      ->expected(0, 1)
      ->default_str("");
  order->add_flag("--json", c.json, "JSON output");
  order->add_option("--cap", c.cap, "linear extension count limit");

  auto* complex = app.add_subcommand("complex", "facets and f/h-vectors of a complex");
  complex->add_option("spec", c.spec_path, "matroid spec (JSON)")->required();
  complex->add_option("--kind", c.kind, "augmented-ea|ea|nbc|augmented-nbc");
  complex->add_flag("--json", c.json, "JSON output");

  auto* shell = app.add_subcommand("shell", "check the shelling from one linear extension");
  shell->add_option("spec", c.spec_path, "matroid spec (JSON)")->required();
  shell->add_option("--complex", c.complex_kind, "augmented-ea|ea|nbc|augmented-nbc");
  shell->add_option("--kind", c.kind, "order to extend (default depends on the complex)");
  shell->add_option("--order-seed", c.order_seed, "seed of the linear extension");
  shell->add_option("--seed", c.seed, "fallback seed");
  shell->add_option("--report", c.report, "write the report JSON here");

  auto* tutte = app.add_subcommand("tutte", "Tutte polynomial");
  tutte->add_option("spec", c.spec_path, "matroid spec (JSON)")->required();
  tutte->add_flag("--json", c.json, "JSON output");

  auto* verify = app.add_subcommand("verify", "run the theorem suite (default: corpus)");
  verify->add_option("specs", c.spec_paths, "matroid specs; none means the corpus");
  verify->add_flag("--corpus", c.with_corpus, "also verify the corpus");
  verify->add_option("--seed", c.seed, "seed for sampled linear extensions");
  verify->add_option("--cap", c.cap, "linear extensions per poset")->check(CLI::PositiveNumber);
  verify->add_option("--report", c.report, "write findings JSON here");

  auto* corpus = app.add_subcommand("corpus", "list the corpus");
  corpus->add_flag("--json", c.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*activity) return RunActivity(c);
    if (*order) return RunOrder(c);
    if (*complex) return RunComplex(c);
    if (*shell) return RunShell(c);
    if (*tutte) return RunTutte(c);
    if (*verify) return RunVerify(c);
    if (*corpus) return RunCorpus(c);
  } catch (const UsageError& e) {
    std::cerr << "activita: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "activita: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
