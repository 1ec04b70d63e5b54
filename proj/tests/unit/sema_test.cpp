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

#include "starplat/corpus.hpp"
#include "starplat/sema.hpp"

namespace starplat {
namespace {

const Symbol* find_symbol(const TypedProgram& tp, std::string_view name) {
  for (const auto& s : tp.symbols)
    if (s.name == name) return &s;
  return nullptr;
}

TEST(Sema, SsspTypes) {
  const TypedProgram tp = analyze_source(find_corpus_entry("sssp")->source());
  const Symbol* dist = find_symbol(tp, "dist");
  ASSERT_TRUE(dist);
  EXPECT_TRUE(dist->type.is(DslType::Kind::PropNode));
  EXPECT_EQ(dist->type.prim, Primitive::Int);
  EXPECT_EQ(find_symbol(tp, "modified")->type.prim, Primitive::Bool);
  EXPECT_TRUE(find_symbol(tp, "finished")->type.is_bool());
  EXPECT_TRUE(find_symbol(tp, "e")->type.is(DslType::Kind::Edge));
}

TEST(Sema, CorpusHasNoWarnings) {
  for (const auto& e : corpus()) EXPECT_TRUE(analyze_source(e.source()).warnings.empty()) << e.name;
}

TEST(Sema, UndeclaredIdentifierIsPositioned) {
  try {
    analyze_source("function f(Graph g) {\n  int x = y + 1;\n}");
    FAIL() << "expected TypeError";
  } catch (const TypeError& e) {
    ASSERT_TRUE(e.pos());
    EXPECT_EQ(e.pos()->line, 2);
    EXPECT_EQ(e.pos()->col, 11);
  }
}

TEST(Sema, RejectsTypeMismatches) {
  EXPECT_THROW(analyze_source("function f(Graph g) { bool b = 1 + 2; }"), TypeError);
  EXPECT_THROW(analyze_source("function f(Graph g) { propNode<int> p; forall (v in g.nodes()) { v.p = True; } }"),
               TypeError);
  EXPECT_THROW(analyze_source("function f(Graph g) { forall (v in g.nodes()) { propNode<int> p; } }"), TypeError);
  EXPECT_THROW(analyze_source("function f(Graph g) { int x = 0; fixedPoint until (x: True) { } }"), TypeError);
}

TEST(Sema, MinMaxTargetsMustShareVertex) {
  EXPECT_THROW(analyze_source(R"(function f(Graph g) {
  propNode<int> a;
  propNode<bool> b;
  forall (v in g.nodes()) {
    forall (w in g.neighbors(v)) {
      <w.a, v.b> = <Min(w.a, 1), True>;
    }
  }
})"),
               TypeError);
}

TEST(Sema, SsspFixedPointIsFused) {
  const TypedProgram tp = analyze_source(find_corpus_entry("sssp")->source());
  ASSERT_EQ(tp.fixed_points.size(), 1u);
  const FixedPointInfo& fp = tp.fixed_points.begin()->second;
  EXPECT_TRUE(fp.fused);
  EXPECT_EQ(tp.symbol(fp.flag).name, "finished");
  EXPECT_EQ(fp.fused_writes.size(), 1u);
}

TEST(Sema, PageRankConvergesOnScalars) {
  const TypedProgram tp = analyze_source(find_corpus_entry("pr")->source());
  const FixedPointInfo& fp = tp.fixed_points.begin()->second;
  EXPECT_FALSE(fp.fused);
  EXPECT_TRUE(fp.drivers.empty());
  bool links_diff = false;
  for (int s : fp.linked) links_diff = links_diff || tp.symbol(s).name == "diff";
  EXPECT_TRUE(links_diff);
}

TEST(Sema, RegionReductionsAndRemoteWrites) {
  const TypedProgram red = analyze_source(corpus_snippet("reduction"));
  ASSERT_EQ(red.regions.size(), 1u);
  const RegionInfo& ri = red.regions.begin()->second;
  ASSERT_EQ(ri.reductions.size(), 1u);
  EXPECT_EQ(red.symbol(ri.reductions[0].first).name, "accum");

  const TypedProgram sssp = analyze_source(find_corpus_entry("sssp")->source());
  ASSERT_EQ(sssp.regions.size(), 1u);
  EXPECT_EQ(sssp.regions.begin()->second.remote_write_sites.size(), 1u);
}

TEST(Sema, SsspTransferPlan) {
  const TypedProgram tp = analyze_source(find_corpus_entry("sssp")->source());
  const TransferPlan plan = analyze_transfers(tp);
  const TransferEntry* finished = plan.find("finished");
  ASSERT_TRUE(finished);
  EXPECT_EQ(finished->direction, TransferDirection::RoundTripPerIteration);
  const TransferEntry* dist = plan.find("dist");
  ASSERT_TRUE(dist);
  EXPECT_EQ(dist->direction, TransferDirection::DeviceToHostAtEnd);
  const TransferEntry* g = plan.find("g");
  ASSERT_TRUE(g);
  EXPECT_EQ(g->direction, TransferDirection::HostToDeviceOnce);
}

TEST(Sema, LoopLocalScalarIsDeviceOnly) {
  const TypedProgram tp = analyze_source(corpus_snippet("reduction"));
  const TransferPlan plan = analyze_transfers(tp);
  const TransferEntry* count = plan.find("count");
  EXPECT_TRUE(count == nullptr || count->direction == TransferDirection::DeviceOnly);
}

}  // namespace
}  // namespace starplat
