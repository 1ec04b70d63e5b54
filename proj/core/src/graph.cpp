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

#include "starplat/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <random>
#include <sstream>

namespace starplat {

int CsrGraph::find_edge(int u, int w) const {
  if (u < 0 || u >= n) return -1;
  auto first = adj.begin() + offsets[u];
  auto last = adj.begin() + offsets[u + 1];
  auto it = std::lower_bound(first, last, w);
  return it != last && *it == w ? static_cast<int>(it - adj.begin()) : -1;
}

int CsrGraph::edge_source(int e) const {
  auto it = std::upper_bound(offsets.begin(), offsets.end(), e);
  return static_cast<int>(it - offsets.begin()) - 1;
}

CsrGraph build_graph(int n, const std::vector<EdgeRecord>& edges, bool directed) {
  if (n < 0) throw RangeError("vertex count must be non-negative");
  std::vector<EdgeRecord> all;
  all.reserve(directed ? edges.size() : 2 * edges.size());
  for (const auto& e : edges) {
    if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n)
      throw RangeError("edge " + std::to_string(e.src) + " -> " + std::to_string(e.dst) +
                       " is outside [0, " + std::to_string(n) + ")");
    all.push_back(e);
  }
  if (!directed)
    for (const auto& e : edges)
      if (e.src != e.dst) all.push_back({e.dst, e.src, e.weight});
  if (all.size() > static_cast<std::size_t>(std::numeric_limits<int>::max()))
    throw RangeError("too many edges");

  // Counting sort by source, then a stable sort of each list by destination
  // so parallel edges keep their input order.
  CsrGraph g;
  g.n = n;
  g.m = static_cast<int>(all.size());
  g.directed = directed;
  g.offsets.assign(n + 1, 0);
  for (const auto& e : all) ++g.offsets[e.src + 1];
  for (int v = 0; v < n; ++v) g.offsets[v + 1] += g.offsets[v];
  std::vector<EdgeRecord> sorted(all.size());
  std::vector<int> cursor(g.offsets.begin(), g.offsets.end() - 1);
  for (const auto& e : all) sorted[cursor[e.src]++] = e;
  for (int v = 0; v < n; ++v)
    std::stable_sort(sorted.begin() + g.offsets[v], sorted.begin() + g.offsets[v + 1],
                     [](const EdgeRecord& a, const EdgeRecord& b) { return a.dst < b.dst; });
  g.adj.resize(g.m);
  g.weights.resize(g.m);
  for (int e = 0; e < g.m; ++e) {
    g.adj[e] = sorted[e].dst;
    g.weights[e] = sorted[e].weight;
  }

  // Transpose: walking forward edges in order keeps each reverse list sorted
  // by source.
  g.rev_offsets.assign(n + 1, 0);
  for (int e = 0; e < g.m; ++e) ++g.rev_offsets[g.adj[e] + 1];
  for (int v = 0; v < n; ++v) g.rev_offsets[v + 1] += g.rev_offsets[v];
  g.rev_adj.resize(g.m);
  g.rev_eid.resize(g.m);
  cursor.assign(g.rev_offsets.begin(), g.rev_offsets.end() - 1);
  for (int u = 0; u < n; ++u) {
    for (int e = g.offsets[u]; e < g.offsets[u + 1]; ++e) {
      int slot = cursor[g.adj[e]]++;
      g.rev_adj[slot] = u;
      g.rev_eid[slot] = e;
    }
  }
  return g;
}

namespace {

bool parse_int(std::string_view field, long long& out) {
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc() && ptr == field.data() + field.size();
}

}  // namespace

CsrGraph parse_edge_list(std::string_view text, bool directed, int default_weight) {
  std::vector<EdgeRecord> edges;
  int max_id = -1;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) fields.push_back(line.substr(i, j - i));
      i = j;
    }
    if (fields.empty() || fields[0].front() == '#') continue;
    const SourcePos where{line_no, 1};
    if (fields.size() < 2 || fields.size() > 3)
      throw FormatError("expected `u v [w]`, found " + std::to_string(fields.size()) + " fields",
                        where);
    long long vals[3] = {0, 0, default_weight};
    for (std::size_t f = 0; f < fields.size(); ++f) {
      if (!parse_int(fields[f], vals[f]))
        throw FormatError("'" + std::string(fields[f]) + "' is not an integer", where);
      if (vals[f] < std::numeric_limits<int>::min() || vals[f] > std::numeric_limits<int>::max())
        throw FormatError("'" + std::string(fields[f]) + "' does not fit in 32 bits", where);
    }
    if (vals[0] < 0 || vals[1] < 0) throw FormatError("vertex ids must be non-negative", where);
    if (std::max(vals[0], vals[1]) >= std::numeric_limits<int>::max())
      throw FormatError("vertex id too large", where);
    edges.push_back({static_cast<int>(vals[0]), static_cast<int>(vals[1]), static_cast<int>(vals[2])});
    max_id = std::max(max_id, static_cast<int>(std::max(vals[0], vals[1])));
  }
  return build_graph(max_id + 1, edges, directed);
}

CsrGraph load_edge_list(const std::string& path, bool directed, int default_weight) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open graph file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading graph file '" + path + "'");
  return parse_edge_list(ss.str(), directed, default_weight);
}

std::vector<int> undirected_twins(const CsrGraph& g) {
  // The k-th u->v slot pairs with the k-th v->u slot.
  std::vector<int> twin(g.m, -1);
  std::map<std::pair<int, int>, std::vector<int>> slots;
  for (int u = 0; u < g.n; ++u)
    for (int e = g.offsets[u]; e < g.offsets[u + 1]; ++e) slots[{u, g.adj[e]}].push_back(e);
  for (const auto& [key, list] : slots) {
    auto [u, v] = key;
    if (u == v) {
      for (int e : list) twin[e] = e;
      continue;
    }
    if (u > v) continue;
    auto it = slots.find({v, u});
    if (it == slots.end()) continue;
    const std::size_t k = std::min(list.size(), it->second.size());
    for (std::size_t i = 0; i < k; ++i) {
      twin[list[i]] = it->second[i];
      twin[it->second[i]] = list[i];
    }
  }
  return twin;
}

std::string format_edge_list(const CsrGraph& g) {
  std::ostringstream os;
  std::vector<int> twin;
  if (!g.directed) twin = undirected_twins(g);
  for (int u = 0; u < g.n; ++u) {
    for (int e = g.offsets[u]; e < g.offsets[u + 1]; ++e) {
      if (!g.directed && twin[e] >= 0 && twin[e] < e) continue;
      os << u << ' ' << g.adj[e] << ' ' << g.weights[e] << '\n';
    }
  }
  return os.str();
}

CsrGraph assign_random_weights(const CsrGraph& g, int lo, int hi, std::uint64_t seed) {
  if (lo > hi)
    throw RangeError("weight range [" + std::to_string(lo) + ", " + std::to_string(hi) + "] is empty");
  std::mt19937_64 rng(seed);
  const std::uint64_t span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  auto draw = [&]() {
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return static_cast<int>(lo + static_cast<std::int64_t>(x % span));
  };
  CsrGraph out = g;
  std::vector<int> twin;
  if (!g.directed) twin = undirected_twins(g);
  std::vector<char> done(g.m, 0);
  for (int e = 0; e < g.m; ++e) {
    if (done[e]) continue;
    out.weights[e] = draw();
    done[e] = 1;
    if (!g.directed && twin[e] >= 0) {
      out.weights[twin[e]] = out.weights[e];
      done[twin[e]] = 1;
    }
  }
  return out;
}

int min_wt(const CsrGraph& g) {
  if (g.m == 0) throw EmptyGraphError("minWt of a graph without edges");
  return *std::min_element(g.weights.begin(), g.weights.end());
}

int max_wt(const CsrGraph& g) {
  if (g.m == 0) throw EmptyGraphError("maxWt of a graph without edges");
  return *std::max_element(g.weights.begin(), g.weights.end());
}

std::vector<Partition> block_partition(int n, int nranks) {
  if (nranks < 1) throw ArgError("rank count must be at least 1, got " + std::to_string(nranks));
  if (n < 0) throw ArgError("vertex count must be non-negative");
  const int size = (n + nranks - 1) / nranks;
  std::vector<Partition> parts(nranks);
  for (int r = 0; r < nranks; ++r) {
    Partition& p = parts[r];
    p.rank = r;
    p.nranks = nranks;
    p.local_begin = r * size;
    p.local_end = (r + 1) * size;
    p.padded = std::clamp(p.local_end - std::max(p.local_begin, n), 0, size);
  }
  return parts;
}

int block_owner(int n, int nranks, int v) {
  const int size = (n + nranks - 1) / nranks;
  return size == 0 ? 0 : v / size;
}

}  // namespace starplat
