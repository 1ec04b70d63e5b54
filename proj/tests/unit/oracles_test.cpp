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
#include <cmath>

#include "generators.hpp"
#include "starplat/oracles.hpp"

namespace starplat {
namespace {

// Bellman-Ford relaxation to a fixpoint, independent of the Dijkstra oracle.
std::vector<std::int64_t> bellman_ford(const CsrGraph& g, int src) {
  std::vector<std::int64_t> d(g.n, INT_MAX);
  d[src] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (int u = 0; u < g.n; ++u) {
      if (d[u] == INT_MAX) continue;
      for (int e = g.offsets[u]; e < g.offsets[u + 1]; ++e)
        if (d[u] + g.weights[e] < d[g.adj[e]]) {
          d[g.adj[e]] = d[u] + g.weights[e];
          changed = true;
        }
    }
  }
  return d;
}

TEST(Oracles, DijkstraOnPath) {
  const CsrGraph g = parse_edge_list("0 1 4\n1 2 3\n", true);
  EXPECT_EQ(oracle_dijkstra(g, 0), (std::vector<std::int64_t>{0, 4, 7}));
  EXPECT_EQ(oracle_dijkstra(g, 2), (std::vector<std::int64_t>{INT_MAX, INT_MAX, 0}));
}

TEST(OraclesProperty, DijkstraMatchesBellmanFord) {
  testing::Rng rng(42);
  for (int i = 0; i < 50; ++i) {
    const CsrGraph g = testing::random_graph(rng, 30, 90, i % 2 == 0);
    EXPECT_EQ(oracle_dijkstra(g, 0), bellman_ford(g, 0));
  }
}

TEST(Oracles, BrandesOnUndirectedPath) {
  const CsrGraph g = parse_edge_list("0 1\n1 2\n", false);
  const auto bc = oracle_brandes(g, {0, 1, 2});
  EXPECT_NEAR(bc[0], 0.0, 1e-12);
  EXPECT_NEAR(bc[1], 1.0, 1e-12);
  EXPECT_NEAR(bc[2], 0.0, 1e-12);
}

TEST(Oracles, BrandesOnStar) {
  const CsrGraph g = parse_edge_list("0 1\n0 2\n0 3\n0 4\n", false);
  std::vector<int> all = {0, 1, 2, 3, 4};
  // The center lies on every path between the C(4,2) leaf pairs.
  EXPECT_NEAR(oracle_brandes(g, all)[0], 6.0, 1e-12);
}

TEST(Oracles, PageRankOnCycleIsUniform) {
  for (int k : {3, 4, 10}) {
    std::string text;
    for (int i = 0; i < k; ++i) text += std::to_string(i) + " " + std::to_string((i + 1) % k) + "\n";
    const auto pr = oracle_pagerank_power(parse_edge_list(text, true), 0.85, 50);
    for (double x : pr) EXPECT_NEAR(x, 1.0 / k, 1e-12);
  }
}

TEST(Oracles, PageRankSumsToOneWithoutDanglingVertices) {
  testing::Rng rng(5);
  const CsrGraph g = testing::random_graph(rng, 25, 120, false);
  double sum = 0;
  for (double x : oracle_pagerank_power(g, 0.85, 30)) sum += x;
  bool dangling = false;
  for (int v = 0; v < g.n; ++v) dangling = dangling || g.out_degree(v) == 0;
  if (!dangling) {
    EXPECT_NEAR(sum, 1.0, 1e-9);
  }
}

TEST(Oracles, TrianglesOnCompleteGraphs) {
  for (int k : {3, 4, 5, 6}) {
    std::string text;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) text += std::to_string(i) + " " + std::to_string(j) + "\n";
    EXPECT_EQ(oracle_triangles_enum(parse_edge_list(text, false)), k * (k - 1) * (k - 2) / 6);
  }
}

TEST(Oracles, SizeLimits) {
  testing::Rng rng(1);
  const CsrGraph g = testing::random_graph(rng, 65, 100, true);
  EXPECT_THROW(oracle_brandes(g, {0}), SizeError);
  EXPECT_THROW(oracle_dijkstra(g, 65), RangeError);
}

}  // namespace
}  // namespace starplat
