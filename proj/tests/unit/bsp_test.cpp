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

#include <algorithm>

#include "generators.hpp"
#include "starplat/bsp.hpp"
#include "starplat/corpus.hpp"

namespace starplat {
namespace {

SimOptions ranks(int k) {
  SimOptions o;
  o.nranks = k;
  return o;
}

SimResult simulate_entry(const CorpusEntry& e, const CsrGraph& g, SimOptions o) {
  o.run = e.run_options(g);
  return simulate(analyze_source(e.source()), g, e.default_args(g), o);
}

TEST(Bsp, MinMessagesAggregateAtSender) {
  const CsrGraph g = parse_edge_list("3 0 1\n3 1 2\n0 2 8\n1 2 3\n", true);
  const SimResult s = simulate(analyze_source(find_corpus_entry("sssp")->source()), g, {{"src", "3"}}, ranks(2));
  ASSERT_GE(s.trace.size(), 2u);
  const RankStats& r0 = s.trace[1].ranks[0];
  EXPECT_EQ(r0.rank, 0);
  EXPECT_EQ(r0.msgs_out, 1);
  EXPECT_EQ(r0.raw_msgs_out, 2);
  std::vector<std::int64_t> dist;
  for (const auto& v : s.result.node_prop("dist")->values) dist.push_back(v.i);
  EXPECT_EQ(dist, (std::vector<std::int64_t>{1, 2, 5, 0}));
  EXPECT_TRUE(s.trace.back().finished);
}

TEST(Bsp, TraceTsvHeader) {
  const CsrGraph g = parse_edge_list("0 1 4\n1 2 3\n", true);
  const SimResult s = simulate(analyze_source(find_corpus_entry("sssp")->source()), g, {{"src", "0"}}, ranks(2));
  const std::string tsv = trace_tsv(s.trace);
  EXPECT_EQ(tsv.substr(0, tsv.find('\n')), "superstep\trank\tlocal_updates\tmsgs_out\tfinished");
  EXPECT_EQ(std::count(tsv.begin(), tsv.end(), '\n'), static_cast<long>(1 + 2 * s.trace.size()));
}

TEST(Bsp, PartitionErrors) {
  const TypedProgram tp = analyze_source(find_corpus_entry("sssp")->source());
  const CsrGraph g = parse_edge_list("0 1\n", true);
  EXPECT_THROW(simulate(tp, g, {{"src", "0"}}, ranks(0)), PartitionError);
  SimOptions o = ranks(2);
  o.rank_order = {0, 0};
  EXPECT_THROW(simulate(tp, g, {{"src", "0"}}, o), PartitionError);
  o.rank_order = {1};
  EXPECT_THROW(simulate(tp, g, {{"src", "0"}}, o), PartitionError);
}

TEST(Bsp, CombineOperators) {
  Value cur = Value::of_int(5);
  EXPECT_TRUE(combine(CombineOp::Min, Primitive::Int, cur, Value::of_int(3)));
  EXPECT_EQ(cur.i, 3);
  EXPECT_FALSE(combine(CombineOp::Min, Primitive::Int, cur, Value::of_int(4)));
  EXPECT_EQ(cur.i, 3);
  EXPECT_TRUE(combine(CombineOp::Max, Primitive::Int, cur, Value::of_int(9)));
  EXPECT_EQ(cur.i, 9);
  EXPECT_TRUE(combine(CombineOp::Sum, Primitive::Int, cur, Value::of_int(1)));
  EXPECT_EQ(cur.i, 10);
  Value flag = Value::of_bool(false);
  EXPECT_TRUE(combine(CombineOp::Or, Primitive::Bool, flag, Value::of_bool(true)));
  EXPECT_TRUE(flag.truthy());
}

TEST(Bsp, SendBufferFoldsPerDestination) {
  SendBuffer buf(2);
  Message m;
  m.index = 4;
  m.property = 0;
  m.op = CombineOp::Min;
  m.value = Value::of_int(9);
  buf.add(1, m);
  m.value = Value::of_int(5);
  buf.add(1, m);
  m.index = 5;
  buf.add(1, m);
  EXPECT_EQ(buf.raw_count(), 3);
  EXPECT_EQ(buf.size(), 2);
  ASSERT_EQ(buf.to(1).size(), 2u);
  EXPECT_EQ(buf.to(1)[0].value.i, 5);
  buf.clear();
  EXPECT_EQ(buf.size(), 0);
}

TEST(Bsp, MatchesInterpreterOnCorpus) {
  for (const auto& e : corpus()) {
    const TypedProgram tp = analyze_source(e.source());
    for (const auto& name : e.graphs) {
      const CsrGraph g = load_fixture(STARPLAT_CORPUS_DIR, *find_fixture(name), &e);
      const std::string want = to_tsv(run(tp, g, e.default_args(g), e.run_options(g)));
      for (int k : {1, 2, 3, 7}) {
        SimOptions o = ranks(k);
        o.run = e.run_options(g);
        const SimResult s = simulate(tp, g, e.default_args(g), o);
        EXPECT_EQ(compare_tsv(want, to_tsv(s.result), e.tolerance), std::nullopt)
            << e.name << " " << name << " k=" << k;
      }
    }
  }
}

TEST(Bsp, LocalFixpointKeepsResults) {
  const CorpusEntry& e = *find_corpus_entry("sssp");
  const CsrGraph g = load_fixture(STARPLAT_CORPUS_DIR, *find_fixture("rand200_a"), &e);
  SimOptions o = ranks(3);
  const SimResult plain = simulate_entry(e, g, o);
  o.local_fixpoint_per_superstep = true;
  const SimResult local = simulate_entry(e, g, o);
  EXPECT_EQ(to_tsv(plain.result), to_tsv(local.result));
  EXPECT_LE(local.trace.size(), plain.trace.size());
}

// Property: on random graphs the simulator agrees with the interpreter for
// every rank count, and the result is independent of rank execution order.
TEST(BspProperty, AgreesWithInterpreterUnderAnyRankOrder) {
  testing::Rng rng(4242);
  for (const char* name : {"sssp", "sssp_pull", "bc", "tc", "pr"}) {
    const CorpusEntry& e = *find_corpus_entry(name);
    const TypedProgram tp = analyze_source(e.source());
    for (int i = 0; i < 6; ++i) {
      const bool directed = !e.undirected && i % 2 == 0;
      const CsrGraph g = testing::random_graph(rng, 10 + i * 3, 20 + i * 8, directed);
      const ArgMap args = e.default_args(g);
      const std::string want = to_tsv(run(tp, g, args, e.run_options(g)));
      for (int k : {1, 2, 3, 7}) {
        SimOptions o = ranks(k);
        o.run = e.run_options(g);
        o.rank_order.resize(k);
        for (int r = 0; r < k; ++r) o.rank_order[r] = r;
        std::shuffle(o.rank_order.begin(), o.rank_order.end(), rng);
        const SimResult s = simulate(tp, g, args, o);
        EXPECT_EQ(compare_tsv(want, to_tsv(s.result), e.tolerance), std::nullopt)
            << name << " graph " << i << " k=" << k;
        std::reverse(o.rank_order.begin(), o.rank_order.end());
        EXPECT_EQ(to_tsv(simulate(tp, g, args, o).result), to_tsv(s.result)) << name << " k=" << k;
      }
    }
  }
}

}  // namespace
}  // namespace starplat
