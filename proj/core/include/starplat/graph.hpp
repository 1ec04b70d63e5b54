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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "starplat/errors.hpp"

namespace starplat {

struct EdgeRecord {
  int src = 0;
  int dst = 0;
  int weight = 1;
};

/// Immutable compressed-sparse-row graph with its transpose.
///
/// Adjacency lists are sorted by destination; parallel edges keep input
/// order. Undirected graphs hold both directions of every edge, except that
/// a self-loop is stored once.
struct CsrGraph {
  int n = 0;
  int m = 0;
  bool directed = true;
  std::vector<int> offsets{0};
  std::vector<int> adj;
  std::vector<int> weights;
  std::vector<int> rev_offsets{0};
  std::vector<int> rev_adj;
  /// Forward edge index of each reverse slot.
  std::vector<int> rev_eid;

  int out_degree(int v) const { return offsets[v + 1] - offsets[v]; }
  int in_degree(int v) const { return rev_offsets[v + 1] - rev_offsets[v]; }
  std::span<const int> out_neighbors(int v) const {
    return {adj.data() + offsets[v], static_cast<std::size_t>(out_degree(v))};
  }
  std::span<const int> in_neighbors(int v) const {
    return {rev_adj.data() + rev_offsets[v], static_cast<std::size_t>(in_degree(v))};
  }
  /// First edge index u->w, or -1.
  int find_edge(int u, int w) const;
  bool is_an_edge(int u, int w) const { return find_edge(u, w) >= 0; }
  /// Source vertex of forward edge `e`.
  int edge_source(int e) const;
};

/// Builds the CSR for `n` vertices from `edges`. Undirected builds add the
/// reverse of every non-loop edge. Throws RangeError on ids outside [0, n).
CsrGraph build_graph(int n, const std::vector<EdgeRecord>& edges, bool directed);

/// Parses `u v [w]` lines (0-based ids, `#` comments, blank lines allowed);
/// n is one more than the largest id seen.
CsrGraph parse_edge_list(std::string_view text, bool directed, int default_weight = 1);
CsrGraph load_edge_list(const std::string& path, bool directed, int default_weight = 1);

/// One line per logical edge (`u v w`); undirected graphs list each edge
/// once with u <= v. parse_edge_list() of the result rebuilds `g`.
std::string format_edge_list(const CsrGraph& g);

/// Replaces every weight by an independent draw from [lo, hi]. The draws
/// come from std::mt19937_64 seeded with `seed`, reduced to the range by
/// rejection sampling, in forward edge order; both directions of an
/// undirected edge share one draw.
CsrGraph assign_random_weights(const CsrGraph& g, int lo, int hi, std::uint64_t seed);

int min_wt(const CsrGraph& g);
int max_wt(const CsrGraph& g);

/// Index of the edge slot twin of `e` in an undirected graph (itself for a
/// self-loop).
std::vector<int> undirected_twins(const CsrGraph& g);

/// Rank `rank`'s share of a block partition of [0, padded_n).
struct Partition {
  int rank = 0;
  int nranks = 1;
  int local_begin = 0;
  int local_end = 0;
  /// Slots in [local_begin, local_end) at or beyond the real vertex count.
  int padded = 0;

  int size() const { return local_end - local_begin; }
  bool owns(int v) const { return v >= local_begin && v < local_end; }
  int to_local(int v) const { return v - local_begin; }
  int to_global(int local) const { return local_begin + local; }
};

/// Splits n vertices into `nranks` equal blocks of ceil(n / nranks). When
/// nranks does not divide n the trailing slots are padding vertices with
/// no edges. Throws ArgError for nranks < 1.
std::vector<Partition> block_partition(int n, int nranks);
inline std::vector<Partition> block_partition(const CsrGraph& g, int nranks) {
  return block_partition(g.n, nranks);
}

/// Rank owning global vertex `v` under block_partition(n, nranks).
int block_owner(int n, int nranks, int v);

}  // namespace starplat
