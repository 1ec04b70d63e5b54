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

#include "starplat/oracles.hpp"

#include <functional>
#include <limits>
#include <queue>
#include <utility>

namespace starplat {

namespace {
constexpr int kBruteForceMax = 64;
constexpr int kDenseMax = 4096;
}  // namespace

std::vector<std::int64_t> oracle_dijkstra(const CsrGraph& g, int src) {
  if (src < 0 || src >= g.n) throw RangeError("source " + std::to_string(src) + " is not a vertex");
  constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> dist(g.n, inf);
  using Entry = std::pair<std::int64_t, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
  dist[src] = 0;
  pq.push({0, src});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d != dist[u]) continue;
    for (int e = g.offsets[u]; e < g.offsets[u + 1]; ++e) {
      if (g.weights[e] < 0) throw RangeError("Dijkstra needs non-negative weights");
      const int v = g.adj[e];
      if (d + g.weights[e] < dist[v]) {
        dist[v] = d + g.weights[e];
        pq.push({dist[v], v});
      }
    }
  }
  for (auto& d : dist)
    if (d == inf) d = std::numeric_limits<std::int32_t>::max();
  return dist;
}

std::vector<double> oracle_brandes(const CsrGraph& g, const std::vector<int>& sources) {
  const int n = g.n;
  if (n > kBruteForceMax)
    throw SizeError("betweenness oracle is limited to " + std::to_string(kBruteForceMax) + " vertices");
  // Hop distance and number of shortest paths between every ordered pair.
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  std::vector<std::vector<double>> paths(n, std::vector<double>(n, 0.0));
  for (int s = 0; s < n; ++s) {
    std::queue<int> q;
    dist[s][s] = 0;
    paths[s][s] = 1;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.out_neighbors(u)) {
        if (dist[s][v] < 0) {
          dist[s][v] = dist[s][u] + 1;
          q.push(v);
        }
        if (dist[s][v] == dist[s][u] + 1) paths[s][v] += paths[s][u];
      }
    }
  }
  std::vector<double> bc(n, 0.0);
  for (int s : sources) {
    if (s < 0 || s >= n) throw RangeError("source " + std::to_string(s) + " is not a vertex");
    for (int t = 0; t < n; ++t) {
      if (t == s || dist[s][t] <= 0) continue;
      for (int v = 0; v < n; ++v) {
        if (v == s || v == t || dist[s][v] < 0 || dist[v][t] < 0) continue;
        if (dist[s][v] + dist[v][t] != dist[s][t]) continue;
        bc[v] += paths[s][v] * paths[v][t] / paths[s][t];
      }
    }
  }
  if (!g.directed)
    for (auto& x : bc) x /= 2;
  return bc;
}

std::vector<double> oracle_pagerank_power(const CsrGraph& g, double damping, int iters) {
  const int n = g.n;
  if (n > kDenseMax) throw SizeError("dense PageRank oracle is limited to " + std::to_string(kDenseMax) + " vertices");
  std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
  for (int u = 0; u < n; ++u)
    for (int v : g.out_neighbors(u)) m[static_cast<std::size_t>(v) * n + u] += 1.0 / g.out_degree(u);
  std::vector<double> r(n, 1.0 / n);
  std::vector<double> next(n);
  for (int it = 0; it < iters; ++it) {
    for (int v = 0; v < n; ++v) {
      double acc = 0;
      for (int u = 0; u < n; ++u) acc += m[static_cast<std::size_t>(v) * n + u] * r[u];
      next[v] = (1 - damping) / n + damping * acc;
    }
    r.swap(next);
  }
  return r;
}

std::int64_t oracle_triangles_enum(const CsrGraph& g) {
  const int n = g.n;
  if (n > kDenseMax) throw SizeError("triangle oracle is limited to " + std::to_string(kDenseMax) + " vertices");
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (int u = 0; u < n; ++u)
    for (int v : g.out_neighbors(u))
      if (u != v) adj[u][v] = adj[v][u] = true;
  std::int64_t count = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (!adj[u][v]) continue;
      for (int w = v + 1; w < n; ++w)
        if (adj[u][w] && adj[v][w]) ++count;
    }
  return count;
}

}  // namespace starplat
