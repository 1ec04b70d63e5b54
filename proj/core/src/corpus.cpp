// Copyright 2026 The StarPlat Compiler Authors
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

#include "starplat/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "embedded.hpp"
#include "starplat/oracles.hpp"

namespace starplat {

namespace detail {

namespace {
constexpr std::pair<std::string_view, std::string_view> kEmbedded[] = {
#include "starplat_embedded.inc"
};
}  // namespace

std::string_view embedded_text(std::string_view name) {
  for (const auto& [key, text] : kEmbedded)
    if (key == name) return text;
  return {};
}

}  // namespace detail

namespace {

constexpr double kPrDamping = 0.85;
constexpr double kPrBeta = 1e-6;
constexpr int kPrMaxIter = 100;

std::string base_name(std::string_view path) {
  const auto slash = path.find_last_of('/');
  return std::string(slash == std::string_view::npos ? path : path.substr(slash + 1));
}

std::string format_double(double v) { return format_value(Value::of_double(v)); }

}  // namespace

std::string_view CorpusEntry::source() const { return detail::embedded_text(base_name(file)); }

ArgMap CorpusEntry::default_args(const CsrGraph& g) const {
  ArgMap args;
  if (name == "sssp" || name == "sssp_pull") {
    args["src"] = "0";
  } else if (name == "bc") {
    std::string set;
    for (int v = 0; v < g.n; ++v) set += (v ? "," : "") + std::to_string(v);
    args["sourceSet"] = set;
    args["undirected"] = g.directed ? "False" : "True";
  } else if (name == "pr") {
    args["beta"] = format_double(kPrBeta);
    args["damping"] = format_double(kPrDamping);
    args["maxIter"] = std::to_string(kPrMaxIter);
  }
  return args;
}

RunOptions CorpusEntry::run_options(const CsrGraph& g) const {
  RunOptions o;
  o.function = function;
  if (name == "pr") o.max_iterations = std::max<long long>(default_iteration_cap(g), kPrMaxIter + 1);
  return o;
}

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    const std::vector<std::string> weighted = {"path3", "path5",  "cycle3",  "cycle4",    "cycle10", "star",
                                               "k3",    "k4",     "k5",      "rand200_a", "rand200_b",
                                               "grid6", "wdig6",  "isolated"};
    std::vector<CorpusEntry> v;
    v.push_back({"sssp", "sssp.sp", "Compute_SSSP", {{"src", "source vertex"}}, OracleKind::Dijkstra, weighted,
                 0.0, false});
    v.push_back({"sssp_pull", "sssp_pull.sp", "Compute_SSSP_Pull", {{"src", "source vertex"}},
                 OracleKind::Dijkstra, weighted, 0.0, false});
    v.push_back({"bc",
                 "bc.sp",
                 "Compute_BC",
                 {{"sourceSet", "comma-separated source vertices"},
                  {"undirected", "True to halve pair contributions on undirected graphs"}},
                 OracleKind::Brandes,
                 {"path3", "path5", "cycle3", "cycle4", "cycle10", "star", "k3", "k4", "k5", "grid6", "wdig6",
                  "isolated"},
                 1e-9,
                 false});
    v.push_back({"pr",
                 "pr.sp",
                 "Compute_PR",
                 {{"beta", "convergence threshold on the largest rank change"},
                  {"damping", "damping factor"},
                  {"maxIter", "iteration bound"}},
                 OracleKind::PageRankPower,
                 {"cycle3", "cycle4", "cycle10", "k3", "k4", "k5", "rand200_a", "rand200_b", "grid6", "wdig6"},
                 1e-6,
                 false});
    v.push_back({"tc", "tc.sp", "Compute_TC", {}, OracleKind::TriangleEnum, weighted, 0.0, true});
    return v;
  }();
  return entries;
}

const CorpusEntry* find_corpus_entry(std::string_view name) {
  for (const auto& e : corpus())
    if (e.name == name) return &e;
  return nullptr;
}

std::string_view corpus_snippet(std::string_view name) {
  return detail::embedded_text(std::string(name) + ".sp");
}

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> list = {
      {"path3", "path3.txt", true, 3},
      {"path5", "path5.txt", false, 5},
      {"cycle3", "cycle3.txt", true, 3},
      {"cycle4", "cycle4.txt", true, 4},
      {"cycle10", "cycle10.txt", true, 10},
      {"star", "star.txt", false, 7},
      {"k3", "k3.txt", false, 3},
      {"k4", "k4.txt", false, 4},
      {"k5", "k5.txt", false, 5},
      {"rand200_a", "rand200_a.txt", true, 200},
      {"rand200_b", "rand200_b.txt", true, 200},
      {"grid6", "grid6.txt", false, 36},
      {"wdig6", "wdig6.txt", true, 6},
      {"isolated", "isolated.txt", false, 6},
  };
  return list;
}

const Fixture* find_fixture(std::string_view name) {
  for (const auto& f : fixtures())
    if (f.name == name) return &f;
  return nullptr;
}

CsrGraph load_fixture(const std::string& corpus_dir, const Fixture& f, const CorpusEntry* entry) {
  const bool directed = f.directed && !(entry && entry->undirected);
  return load_edge_list(corpus_dir + "/graphs/" + f.file, directed);
}

std::optional<std::string> check_oracle(const CorpusEntry& entry, const CsrGraph& g, const ArgMap& args,
                                        const RunResult& r) {
  auto close = [&](double want, double got) {
    return std::fabs(want - got) <= entry.tolerance || (entry.tolerance == 0.0 && want == got);
  };
  auto check_prop = [&](const std::string& prop, const auto& want) -> std::optional<std::string> {
    const PropertyDump* d = r.node_prop(prop);
    if (!d) return "result has no property '" + prop + "'";
    if (d->values.size() != want.size()) return "property '" + prop + "' has the wrong length";
    for (std::size_t i = 0; i < want.size(); ++i) {
      const double got = d->values[i].as_double();
      const double w = static_cast<double>(want[i]);
      if (!close(w, got))
        return prop + "[" + std::to_string(i) + "]: expected " + format_double(w) + ", got " + format_double(got);
    }
    return std::nullopt;
  };
  switch (entry.oracle) {
    case OracleKind::Dijkstra:
      return check_prop("dist", oracle_dijkstra(g, std::stoi(args.at("src"))));
    case OracleKind::Brandes: {
      std::vector<int> sources;
      const std::string& set = args.at("sourceSet");
      for (std::size_t pos = 0; pos < set.size();) {
        const auto comma = std::min(set.find(',', pos), set.size());
        sources.push_back(std::stoi(set.substr(pos, comma - pos)));
        pos = comma + 1;
      }
      return check_prop("BC", oracle_brandes(g, sources));
    }
    case OracleKind::PageRankPower: {
      if (r.fixed_points.empty()) return std::string("result has no fixedPoint statistics");
      const auto iters = static_cast<int>(r.fixed_points.front().iterations);
      return check_prop("pageRank", oracle_pagerank_power(g, std::stod(args.at("damping")), iters));
    }
    case OracleKind::TriangleEnum: {
      if (!r.return_value) return std::string("result has no return value");
      const std::int64_t want = oracle_triangles_enum(g);
      if (r.return_value->i != want)
        return "triangle count: expected " + std::to_string(want) + ", got " + std::to_string(r.return_value->i);
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace starplat
