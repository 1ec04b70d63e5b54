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

#include <gtest/gtest.h>

#include <climits>
#include <fstream>
#include <sstream>

#include "generators.hpp"
#include "starplat/corpus.hpp"
#include "starplat/interpreter.hpp"
#include "starplat/oracles.hpp"

namespace starplat {
namespace {

const char* const kOscillating = R"(function Oscillate(Graph g) {
  int x = 0;
  bool done = False;
  fixedPoint until (done: x > 5) {
    x = 1 - x;
  }
})";

std::vector<std::int64_t> ints(const RunResult& r, std::string_view prop) {
  std::vector<std::int64_t> out;
  for (const auto& v : r.node_prop(prop)->values) out.push_back(v.i);
  return out;
}

RunResult run_source(std::string_view src, const CsrGraph& g, const ArgMap& args = {}) {
  return run(analyze_source(src), g, args);
}

TEST(Interpreter, SsspOnPath) {
  const CsrGraph g = parse_edge_list("0 1 4\n1 2 3\n", true);
  const RunResult r = run_source(find_corpus_entry("sssp")->source(), g, {{"src", "0"}});
  EXPECT_EQ(ints(r, "dist"), (std::vector<std::int64_t>{0, 4, 7}));
  EXPECT_TRUE(r.scalar("finished")->truthy());
}

TEST(Interpreter, UnreachableVerticesKeepSentinel) {
  const CsrGraph g = parse_edge_list("0 1 4\n2 1 3\n", true);
  const RunResult r = run_source(find_corpus_entry("sssp")->source(), g, {{"src", "0"}});
  EXPECT_EQ(ints(r, "dist"), (std::vector<std::int64_t>{0, 4, INT_MAX}));
}

TEST(Interpreter, TrianglesOnK4) {
  const CsrGraph g = parse_edge_list("0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n", false);
  const RunResult r = run_source(find_corpus_entry("tc")->source(), g);
  ASSERT_TRUE(r.return_value);
  EXPECT_EQ(r.return_value->i, 4);
}

TEST(Interpreter, PageRankOnFourCycle) {
  const CorpusEntry& pr = *find_corpus_entry("pr");
  const CsrGraph g = parse_edge_list("0 1\n1 2\n2 3\n3 0\n", true);
  const RunResult r = run(analyze_source(pr.source()), g, pr.default_args(g), pr.run_options(g));
  for (const auto& v : r.node_prop("pageRank")->values) EXPECT_NEAR(v.d, 0.25, 1e-9);
}

TEST(Interpreter, FixedPointCapRaisesNonConvergence) {
  const CsrGraph g = parse_edge_list("0 1\n", true);
  try {
    run_source(kOscillating, g);
    FAIL() << "expected RuntimeError";
  } catch (const RuntimeError& e) {
    EXPECT_NE(std::string(e.what()).find("did not converge within 20 iterations"), std::string::npos);
    ASSERT_TRUE(e.pos());
    EXPECT_EQ(e.pos()->line, 4);
  }
  RunOptions o;
  o.max_iterations = 3;
  EXPECT_THROW(run(analyze_source(kOscillating), g, {}, o), RuntimeError);
}

TEST(Interpreter, ArgumentErrors) {
  const TypedProgram tp = analyze_source(find_corpus_entry("sssp")->source());
  const CsrGraph g = parse_edge_list("0 1\n", true);
  EXPECT_THROW(run(tp, g, {}), RuntimeError);
  EXPECT_THROW(run(tp, g, {{"src", "9"}}), RuntimeError);
  EXPECT_THROW(run(tp, g, {{"src", "0"}, {"bogus", "1"}}), ArgError);
}

TEST(Interpreter, GetEdgeOutsideLoopUsesLookup) {
  const CsrGraph g = parse_edge_list("0 1 4\n1 2 3\n", true);
  const RunResult r = run_source(R"(function f(Graph g, node a, node b) {
  edge e = g.get_edge(a, b);
  int w = e.weight;
  bool there = g.is_an_edge(b, a);
})",
                                 g, {{"a", "1"}, {"b", "2"}});
  EXPECT_EQ(r.scalar("w")->i, 3);
  EXPECT_FALSE(r.scalar("there")->truthy());
}

TEST(Interpreter, EarlyReturnRecordsDeclaredOutputs) {
  const CsrGraph g = parse_edge_list("0 1\n", true);
  const RunResult r = run_source(R"(function f(Graph g, int k) {
  int a = k * 2;
  if (a > 3) {
    return a;
  }
  int b = 1;
  return b;
})",
                                 g, {{"k", "5"}});
  ASSERT_TRUE(r.return_value);
  EXPECT_EQ(r.return_value->i, 10);
  EXPECT_TRUE(r.scalar("a"));
  ASSERT_TRUE(r.scalar("b"));
  EXPECT_EQ(r.scalar("b")->kind, Value::Kind::None);
}

TEST(Interpreter, MatchesExpectedOutputs) {
  for (const auto& e : corpus()) {
    const TypedProgram tp = analyze_source(e.source());
    for (const auto& name : e.graphs) {
      const CsrGraph g = load_fixture(STARPLAT_CORPUS_DIR, *find_fixture(name), &e);
      const RunResult r = run(tp, g, e.default_args(g), e.run_options(g));
      std::ifstream in(std::string(STARPLAT_CORPUS_DIR) + "/expected/" + e.name + "__" + name + ".tsv");
      ASSERT_TRUE(in) << e.name << " " << name;
      std::stringstream ss;
      ss << in.rdbuf();
      EXPECT_EQ(compare_tsv(ss.str(), to_tsv(r), e.tolerance), std::nullopt) << e.name << " " << name;
    }
  }
}

// Property: push and pull SSSP agree with Dijkstra on random graphs.
TEST(InterpreterProperty, SsspAgreesWithDijkstra) {
  testing::Rng rng(2026);
  const TypedProgram push = analyze_source(find_corpus_entry("sssp")->source());
  const TypedProgram pull = analyze_source(find_corpus_entry("sssp_pull")->source());
  for (int i = 0; i < 40; ++i) {
    const CsrGraph g = testing::random_graph(rng, 24, 60, i % 3 != 0);
    const int src = static_cast<int>(rng() % 24);
    const ArgMap args{{"src", std::to_string(src)}};
    const auto want = oracle_dijkstra(g, src);
    EXPECT_EQ(ints(run(push, g, args), "dist"), want);
    EXPECT_EQ(ints(run(pull, g, args), "dist"), want);
  }
}

// Property: TC equals the enumeration oracle on random undirected graphs.
TEST(InterpreterProperty, TrianglesAgreeWithEnumeration) {
  testing::Rng rng(77);
  const TypedProgram tc = analyze_source(find_corpus_entry("tc")->source());
  for (int i = 0; i < 30; ++i) {
    const CsrGraph g = testing::random_graph(rng, 20, 30 + i * 3, false);
    EXPECT_EQ(run(tc, g, {}).return_value->i, oracle_triangles_enum(g));
  }
}

// Property: BC equals Brandes on random small graphs, directed or not.
TEST(InterpreterProperty, BetweennessAgreesWithBrandes) {
  testing::Rng rng(99);
  const CorpusEntry& bc = *find_corpus_entry("bc");
  const TypedProgram tp = analyze_source(bc.source());
  for (int i = 0; i < 20; ++i) {
    const CsrGraph g = testing::random_graph(rng, 12, 20, i % 2 == 0);
    const RunResult r = run(tp, g, bc.default_args(g));
    std::vector<int> all(g.n);
    for (int v = 0; v < g.n; ++v) all[v] = v;
    const auto want = oracle_brandes(g, all);
    for (int v = 0; v < g.n; ++v) EXPECT_NEAR(r.node_prop("BC")->values[v].d, want[v], 1e-9);
  }
}

}  // namespace
}  // namespace starplat
