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

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "starplat/graph.hpp"

namespace starplat::testing {

using Rng = std::mt19937_64;

/// Random multigraph-free graph with n vertices and about m edges, no
/// self-loops, weights in [lo, hi]. Undirected graphs never repeat a pair.
inline CsrGraph random_graph(Rng& rng, int n, int m, bool directed, int lo = 1, int hi = 20) {
  std::vector<EdgeRecord> edges;
  std::vector<std::vector<char>> used(n, std::vector<char>(n, 0));
  std::uniform_int_distribution<int> vert(0, n - 1);
  std::uniform_int_distribution<int> wt(lo, hi);
  const long long max_pairs = directed ? 1LL * n * (n - 1) : 1LL * n * (n - 1) / 2;
  const long long target = std::min<long long>(m, max_pairs);
  while (static_cast<long long>(edges.size()) < target) {
    const int u = vert(rng);
    const int v = vert(rng);
    if (u == v || used[u][v]) continue;
    used[u][v] = 1;
    if (!directed) used[v][u] = 1;
    edges.push_back({u, v, wt(rng)});
  }
  return build_graph(n, edges, directed);
}

/// Random DSL expression over int variables `a`, `b`, `c` with the given
/// nesting depth; used for parser round-trip properties.
inline std::string random_expr(Rng& rng, int depth) {
  static const char* const kLeaves[] = {"a", "b", "c", "0", "1", "42", "2.5", "True", "False", "INT_MAX"};
  static const char* const kOps[] = {"+", "-", "*", "/", "<", "<=", ">", ">=", "==", "!=", "&&", "||"};
  std::uniform_int_distribution<int> pick(0, 9);
  if (depth == 0 || pick(rng) < 2) return kLeaves[pick(rng)];
  switch (pick(rng) % 4) {
    case 0: return "(" + random_expr(rng, depth - 1) + ")";
    case 1: return (pick(rng) % 2 ? "!" : "- ") + random_expr(rng, depth - 1);
    default: {
      std::uniform_int_distribution<int> op(0, 11);
      return random_expr(rng, depth - 1) + " " + kOps[op(rng)] + " " + random_expr(rng, depth - 1);
    }
  }
}

}  // namespace starplat::testing
