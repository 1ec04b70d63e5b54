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
#include "starplat/graph.hpp"

namespace starplat {
namespace {

TEST(Graph, ParsesDirectedEdgeList) {
  const CsrGraph g = parse_edge_list("# comment\n0 1 4\n1 2 3\n\n2 0\n", true);
  EXPECT_EQ(g.n, 3);
  EXPECT_EQ(g.m, 3);
  EXPECT_EQ(g.weights[g.find_edge(0, 1)], 4);
  EXPECT_EQ(g.weights[g.find_edge(2, 0)], 1);
  EXPECT_FALSE(g.is_an_edge(1, 0));
  EXPECT_EQ(g.in_degree(0), 1);
}

TEST(Graph, UndirectedStoresBothDirections) {
  const CsrGraph g = parse_edge_list("0 1 5\n1 2 6\n", false);
  EXPECT_EQ(g.m, 4);
  EXPECT_TRUE(g.is_an_edge(1, 0));
  EXPECT_EQ(g.weights[g.find_edge(2, 1)], 6);
}

TEST(Graph, AdjacencySortedAndReverseConsistent) {
  testing::Rng rng(11);
  const CsrGraph g = testing::random_graph(rng, 40, 200, true);
  for (int v = 0; v < g.n; ++v) {
    auto nb = g.out_neighbors(v);
    EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
  }
  for (int v = 0; v < g.n; ++v)
    for (int k = g.rev_offsets[v]; k < g.rev_offsets[v + 1]; ++k) {
      const int e = g.rev_eid[k];
      EXPECT_EQ(g.adj[e], v);
      EXPECT_EQ(g.edge_source(e), g.rev_adj[k]);
    }
}

TEST(Graph, FormatErrorsArePositioned) {
  try {
    parse_edge_list("0 1\n1 2 3 4\n", true);
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    ASSERT_TRUE(e.pos());
    EXPECT_EQ(e.pos()->line, 2);
  }
  EXPECT_THROW(parse_edge_list("0 -1\n", true), FormatError);
  EXPECT_THROW(parse_edge_list("0 99999999999\n", true), FormatError);
  EXPECT_THROW(load_edge_list("/nonexistent/graph.txt", true), IoError);
}

TEST(Graph, RandomWeightsDependOnlyOnSeed) {
  const CsrGraph g = parse_edge_list("0 1\n1 2\n2 3\n3 0\n0 2\n", false);
  const CsrGraph a = assign_random_weights(g, 1, 100, 7);
  const CsrGraph b = assign_random_weights(g, 1, 100, 7);
  const CsrGraph c = assign_random_weights(g, 1, 100, 8);
  EXPECT_EQ(a.weights, b.weights);
  EXPECT_NE(a.weights, c.weights);
  for (int w : a.weights) {
    EXPECT_GE(w, 1);
    EXPECT_LE(w, 100);
  }
  const auto twin = undirected_twins(a);
  for (int e = 0; e < a.m; ++e) EXPECT_EQ(a.weights[e], a.weights[twin[e]]);
  EXPECT_THROW(assign_random_weights(g, 5, 1, 0), RangeError);
}

TEST(Graph, FormatRoundTrips) {
  testing::Rng rng(3);
  for (bool directed : {true, false}) {
    const CsrGraph g = testing::random_graph(rng, 20, 50, directed);
    const CsrGraph h = parse_edge_list(format_edge_list(g), directed);
    EXPECT_EQ(g.offsets, h.offsets);
    EXPECT_EQ(g.adj, h.adj);
    EXPECT_EQ(g.weights, h.weights);
  }
}

TEST(Graph, BlockPartitionCoversVertices) {
  for (int n : {1, 5, 10, 36}) {
    for (int k : {1, 2, 3, 7}) {
      const auto parts = block_partition(n, k);
      ASSERT_EQ(parts.size(), static_cast<std::size_t>(k));
      int next = 0;
      for (const auto& p : parts) {
        EXPECT_EQ(p.local_begin, next);
        EXPECT_EQ(p.size(), (n + k - 1) / k);
        for (int v = p.local_begin; v < p.local_end && v < n; ++v) EXPECT_EQ(block_owner(n, k, v), p.rank);
        next = p.local_end;
      }
      for (int v = 0; v < n; ++v) {
        const int r = block_owner(n, k, v);
        EXPECT_TRUE(parts[r].owns(v));
      }
    }
  }
}

}  // namespace
}  // namespace starplat
