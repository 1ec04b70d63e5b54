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

#include <set>

#include "starplat/corpus.hpp"

namespace starplat {
namespace {

TEST(Corpus, HasFiveProgramsThatAnalyzeCleanly) {
  std::set<std::string> names;
  for (const auto& e : corpus()) {
    names.insert(e.name);
    const TypedProgram tp = analyze_source(e.source());
    EXPECT_GE(tp.function_index(e.function), 0) << e.name;
    EXPECT_FALSE(e.graphs.empty()) << e.name;
    EXPECT_EQ(find_corpus_entry(e.name), &e);
  }
  EXPECT_EQ(names, (std::set<std::string>{"sssp", "sssp_pull", "bc", "pr", "tc"}));
  EXPECT_EQ(find_corpus_entry("nope"), nullptr);
}

TEST(Corpus, FixturesLoadWithDeclaredSize) {
  EXPECT_GE(fixtures().size(), 10u);
  for (const auto& f : fixtures()) {
    const CsrGraph g = load_fixture(STARPLAT_CORPUS_DIR, f);
    EXPECT_EQ(g.n, f.n) << f.name;
    EXPECT_EQ(g.directed, f.directed) << f.name;
    EXPECT_EQ(find_fixture(f.name), &f);
  }
}

TEST(Corpus, EntryGraphsExist) {
  for (const auto& e : corpus())
    for (const auto& name : e.graphs) EXPECT_NE(find_fixture(name), nullptr) << e.name << " " << name;
}

TEST(Corpus, SnippetIsEmbedded) {
  EXPECT_NE(corpus_snippet("reduction").find("accum"), std::string_view::npos);
  EXPECT_TRUE(corpus_snippet("missing").empty());
}

TEST(Corpus, OraclesAcceptInterpreterResults) {
  for (const auto& e : corpus()) {
    const TypedProgram tp = analyze_source(e.source());
    for (const auto& name : e.graphs) {
      const CsrGraph g = load_fixture(STARPLAT_CORPUS_DIR, *find_fixture(name), &e);
      const ArgMap args = e.default_args(g);
      const RunResult r = run(tp, g, args, e.run_options(g));
      EXPECT_EQ(check_oracle(e, g, args, r), std::nullopt) << e.name << " " << name;
    }
  }
}

TEST(Corpus, OracleRejectsPerturbedResult) {
  const CorpusEntry& e = *find_corpus_entry("sssp");
  const CsrGraph g = load_fixture(STARPLAT_CORPUS_DIR, *find_fixture("wdig6"), &e);
  const ArgMap args = e.default_args(g);
  RunResult r = run(analyze_source(e.source()), g, args, e.run_options(g));
  for (auto& p : r.node_props)
    if (p.name == "dist") p.values[1].i += 1;
  EXPECT_NE(check_oracle(e, g, args, r), std::nullopt);
}

TEST(Corpus, PageRankCapCoversIterationBound) {
  const CorpusEntry& e = *find_corpus_entry("pr");
  const CsrGraph g = load_fixture(STARPLAT_CORPUS_DIR, *find_fixture("cycle3"), &e);
  ASSERT_TRUE(e.run_options(g).max_iterations);
  EXPECT_GE(*e.run_options(g).max_iterations, 101);
  EXPECT_EQ(e.default_args(g).at("maxIter"), "100");
}

}  // namespace
}  // namespace starplat
