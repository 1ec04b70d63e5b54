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

// Support library for code emitted by starplatc: CSR graph loading, CAS
// atomics, argument parsing, result printing and timing. Define SP_RT_MPI
// before including it for the distributed helpers; the device helpers are
// enabled under nvcc.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <climits>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace sp__rt {

[[noreturn]] inline void die(const std::string& message) {
  std::fprintf(stderr, "error: %s\n", message.c_str());
  std::exit(1);
}

// ------------------------------------------------------------------ graph

/// Compressed sparse row graph with a transposed copy for incoming edges.
/// Each adjacency list is sorted by neighbor id; parallel edges keep input
/// order.
struct Graph {
  int n = 0;
  int m = 0;
  bool directed = true;
  std::vector<int> offsets;
  std::vector<int> adj;
  std::vector<int> weights;
  std::vector<int> rev_offsets;
  std::vector<int> rev_adj;
  std::vector<int> rev_eid;

  int num_nodes() const { return n; }
  int num_edges() const { return m; }
  int count_out_nbrs(int v) const { return offsets[v + 1] - offsets[v]; }
  int find_edge(int u, int w) const {
    auto first = adj.begin() + offsets[u];
    auto last = adj.begin() + offsets[u + 1];
    auto it = std::lower_bound(first, last, w);
    return it != last && *it == w ? static_cast<int>(it - adj.begin()) : -1;
  }
  int get_edge(int u, int w) const {
    const int e = find_edge(u, w);
    if (e < 0) die("no edge " + std::to_string(u) + " -> " + std::to_string(w));
    return e;
  }
  bool is_an_edge(int u, int w) const { return find_edge(u, w) >= 0; }
  int min_wt() const {
    if (m == 0) die("graph has no edges");
    return *std::min_element(weights.begin(), weights.end());
  }
  int max_wt() const {
    if (m == 0) die("graph has no edges");
    return *std::max_element(weights.begin(), weights.end());
  }
};

struct EdgeRecord {
  int src = 0;
  int dst = 0;
  int weight = 1;
};

inline Graph build_graph(int n, const std::vector<EdgeRecord>& edges, bool directed) {
  std::vector<EdgeRecord> all(edges);
  if (!directed)
    for (const auto& e : edges)
      if (e.src != e.dst) all.push_back({e.dst, e.src, e.weight});
  Graph g;
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
  g.rev_offsets.assign(n + 1, 0);
  for (int e = 0; e < g.m; ++e) ++g.rev_offsets[g.adj[e] + 1];
  for (int v = 0; v < n; ++v) g.rev_offsets[v + 1] += g.rev_offsets[v];
  g.rev_adj.resize(g.m);
  g.rev_eid.resize(g.m);
  cursor.assign(g.rev_offsets.begin(), g.rev_offsets.end() - 1);
  for (int u = 0; u < n; ++u) {
    for (int e = g.offsets[u]; e < g.offsets[u + 1]; ++e) {
      const int slot = cursor[g.adj[e]]++;
      g.rev_adj[slot] = u;
      g.rev_eid[slot] = e;
    }
  }
  return g;
}

/// Reads `u v [w]` lines (`#` starts a comment line); n = 1 + largest id.
inline Graph load_graph(const std::string& path, bool directed) {
  std::ifstream in(path);
  if (!in) die("cannot open graph file '" + path + "'");
  std::vector<EdgeRecord> edges;
  int max_id = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::vector<std::string> f;
    for (std::string tok; fields >> tok;) f.push_back(tok);
    if (f.empty() || f[0][0] == '#') continue;
    if (f.size() < 2 || f.size() > 3) die(path + ":" + std::to_string(line_no) + ": expected `u v [w]`");
    long long vals[3] = {0, 0, 1};
    for (std::size_t i = 0; i < f.size(); ++i) {
      auto [p, ec] = std::from_chars(f[i].data(), f[i].data() + f[i].size(), vals[i]);
      if (ec != std::errc() || p != f[i].data() + f[i].size() || vals[i] < INT_MIN || vals[i] > INT_MAX)
        die(path + ":" + std::to_string(line_no) + ": '" + f[i] + "' is not a 32-bit integer");
    }
    if (vals[0] < 0 || vals[1] < 0) die(path + ":" + std::to_string(line_no) + ": negative vertex id");
    edges.push_back({static_cast<int>(vals[0]), static_cast<int>(vals[1]), static_cast<int>(vals[2])});
    max_id = std::max(max_id, static_cast<int>(std::max(vals[0], vals[1])));
  }
  return build_graph(max_id + 1, edges, directed);
}

// ------------------------------------------------------------- properties

template <class T>
struct Storage {
  using type = T;
};
// Bool properties are stored as bytes so threads can write distinct
// elements concurrently.
template <>
struct Storage<bool> {
  using type = unsigned char;
};

template <class T>
using Prop = std::vector<typename Storage<T>::type>;

template <class S>
bool any_true(const std::vector<S>& p) {
  return std::any_of(p.begin(), p.end(), [](auto x) { return x != 0; });
}

template <class S>
bool any_true(const std::vector<S>& p, int begin, int end) {
  return std::any_of(p.begin() + begin, p.begin() + end, [](auto x) { return x != 0; });
}

// ---------------------------------------------------------------- atomics

/// Lowers *addr to val when smaller. Returns true when this call won.
template <class T, class U>
bool atomic_min(T* addr, U value) {
  const T val = static_cast<T>(value);
  std::atomic_ref<T> ref(*addr);
  T cur = ref.load(std::memory_order_relaxed);
  while (val < cur)
    if (ref.compare_exchange_weak(cur, val, std::memory_order_relaxed)) return true;
  return false;
}

/// Raises *addr to val when larger. Returns true when this call won.
template <class T, class U>
bool atomic_max(T* addr, U value) {
  const T val = static_cast<T>(value);
  std::atomic_ref<T> ref(*addr);
  T cur = ref.load(std::memory_order_relaxed);
  while (val > cur)
    if (ref.compare_exchange_weak(cur, val, std::memory_order_relaxed)) return true;
  return false;
}

template <class T, class U>
void atomic_add(T* addr, U value) {
  std::atomic_ref<T> ref(*addr);
  T cur = ref.load(std::memory_order_relaxed);
  while (!ref.compare_exchange_weak(cur, static_cast<T>(cur + value), std::memory_order_relaxed)) {
  }
}

template <class T, class U>
void atomic_mul(T* addr, U value) {
  std::atomic_ref<T> ref(*addr);
  T cur = ref.load(std::memory_order_relaxed);
  while (!ref.compare_exchange_weak(cur, static_cast<T>(cur * value), std::memory_order_relaxed)) {
  }
}

/// Sets *addr from `expected` to `desired`. Returns true when this call won.
inline bool atomic_claim(int* addr, int expected, int desired) {
  return std::atomic_ref<int>(*addr).compare_exchange_strong(expected, desired, std::memory_order_relaxed);
}

template <class T, class U>
void atomic_store(T* addr, U value) {
  std::atomic_ref<T>(*addr).store(static_cast<T>(value), std::memory_order_relaxed);
}

// ------------------------------------------------------------- arguments

/// Command line: `<graph> [--undirected] name=value...`.
class Args {
 public:
  Args(int argc, char** argv) {
    if (argc < 2) die(std::string("usage: ") + argv[0] + " <graph> [--undirected] name=value...");
    graph_ = argv[1];
    for (int i = 2; i < argc; ++i) {
      const std::string a = argv[i];
      if (a == "--undirected") {
        directed_ = false;
        continue;
      }
      const auto eq = a.find('=');
      if (eq == std::string::npos) die("expected name=value, got '" + a + "'");
      values_[a.substr(0, eq)] = a.substr(eq + 1);
    }
  }

  const std::string& graph() const { return graph_; }
  bool directed() const { return directed_; }

  template <class T>
  T get(const std::string& name) const {
    const std::string& text = raw(name);
    if constexpr (std::is_same_v<T, bool>) {
      if (text == "True" || text == "true" || text == "1") return true;
      if (text == "False" || text == "false" || text == "0") return false;
      die("'" + text + "' is not a bool");
    } else if constexpr (std::is_floating_point_v<T>) {
      char* end = nullptr;
      const double v = std::strtod(text.c_str(), &end);
      if (text.empty() || *end != '\0') die("'" + text + "' is not a number");
      return static_cast<T>(v);
    } else {
      long long v = 0;
      auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
      if (ec != std::errc() || p != text.data() + text.size()) die("'" + text + "' is not an integer");
      return static_cast<T>(v);
    }
  }

  int get_node(const std::string& name, const Graph& g) const {
    const int v = get<int>(name);
    if (v < 0 || v >= g.n) die("argument " + name + " is not a vertex of the graph");
    return v;
  }

  std::vector<int> get_set(const std::string& name, const Graph& g) const {
    std::vector<int> out;
    std::istringstream in(raw(name));
    for (std::string item; std::getline(in, item, ',');) {
      if (item.empty()) continue;
      const int v = std::atoi(item.c_str());
      if (v < 0 || v >= g.n) die("node " + item + " in '" + name + "' is out of range");
      out.push_back(v);
    }
    return out;
  }

 private:
  const std::string& raw(const std::string& name) const {
    auto it = values_.find(name);
    if (it == values_.end()) die("missing argument '" + name + "'");
    return it->second;
  }

  std::string graph_;
  bool directed_ = true;
  std::map<std::string, std::string> values_;
};

// ---------------------------------------------------------------- results

template <class T>
std::string format(T v) {
  char buf[64];
  if constexpr (std::is_same_v<T, bool>) {
    return v ? "True" : "False";
  } else if constexpr (std::is_same_v<T, float>) {
    std::snprintf(buf, sizeof buf, "%.9g", static_cast<double>(v));
  } else if constexpr (std::is_same_v<T, double>) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
  } else {
    std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v));
  }
  return buf;
}

/// Collects a function's properties, scalars and return value and prints
/// them as TSV sections (`#node name`, `#edge name`, `#scalars`, `#return`).
class Output {
 public:
  template <class T, class S>
  void node(const std::string& name, const std::vector<S>& values) {
    nodes_ += "#node " + name + "\n" + rows<T>(values);
  }
  template <class T, class S>
  void edge(const std::string& name, const std::vector<S>& values) {
    edges_ += "#edge " + name + "\n" + rows<T>(values);
  }
  template <class T>
  void scalar(const std::string& name, T value) {
    scalars_ += name + "\t" + format<T>(value) + "\n";
  }
  template <class T>
  void ret(T value) {
    ret_ = "#return\t" + format<T>(value) + "\n";
  }
  void print(std::FILE* out = stdout) const {
    std::fputs((nodes_ + edges_ + "#scalars\n" + scalars_ + ret_).c_str(), out);
  }

 private:
  template <class T, class S>
  static std::string rows(const std::vector<S>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i)
      s += std::to_string(i) + "\t" + format<T>(static_cast<T>(values[i])) + "\n";
    return s;
  }

  std::string nodes_;
  std::string edges_;
  std::string scalars_;
  std::string ret_;
};

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }
  void report(const char* what) const { std::fprintf(stderr, "%s\t%.3f ms\n", what, elapsed_ms()); }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace sp__rt

#ifdef SP_RT_MPI
#include <mpi.h>

namespace sp__rt {

/// Block-partitioned view of a replicated graph: rank r owns
/// [r * block, min(n, (r + 1) * block)); trailing ranks are padded up to
/// `block` slots so collective exchanges use equal-sized slices.
struct DistGraph : Graph {
  int rank = 0;
  int nranks = 1;
  int block = 0;
  int local_begin = 0;
  int local_end = 0;
  int padded = 0;

  int owner(int v) const { return v / block; }
  bool owns(int v) const { return v >= local_begin && v < local_end; }
};

inline DistGraph distribute(Graph g) {
  DistGraph d;
  static_cast<Graph&>(d) = std::move(g);
  MPI_Comm_rank(MPI_COMM_WORLD, &d.rank);
  MPI_Comm_size(MPI_COMM_WORLD, &d.nranks);
  d.block = std::max(1, (d.n + d.nranks - 1) / d.nranks);
  d.local_begin = std::min(d.n, d.rank * d.block);
  d.local_end = std::min(d.n, d.local_begin + d.block);
  d.padded = d.block - (d.local_end - d.local_begin);
  return d;
}

/// Copies every rank's owned slice of `p` to all ranks.
template <class S>
void refresh(const DistGraph& g, std::vector<S>& p) {
  std::vector<S> mine(g.block, S{});
  std::copy(p.begin() + g.local_begin, p.begin() + g.local_end, mine.begin());
  std::vector<S> all(static_cast<std::size_t>(g.block) * g.nranks);
  MPI_Allgather(mine.data(), static_cast<int>(g.block * sizeof(S)), MPI_BYTE, all.data(),
                static_cast<int>(g.block * sizeof(S)), MPI_BYTE, MPI_COMM_WORLD);
  std::copy(all.begin(), all.begin() + g.n, p.begin());
}

/// Copies the out-edges of every rank's owned vertices to all ranks.
template <class S>
void refresh_edges(const DistGraph& g, std::vector<S>& p) {
  std::vector<int> counts(g.nranks), displs(g.nranks);
  for (int r = 0; r < g.nranks; ++r) {
    const int b = std::min(g.n, r * g.block);
    const int e = std::min(g.n, b + g.block);
    displs[r] = static_cast<int>(g.offsets[b] * sizeof(S));
    counts[r] = static_cast<int>((g.offsets[e] - g.offsets[b]) * sizeof(S));
  }
  std::vector<S> all(p.size());
  MPI_Allgatherv(p.data() + g.offsets[g.local_begin], counts[g.rank], MPI_BYTE, all.data(), counts.data(),
                 displs.data(), MPI_BYTE, MPI_COMM_WORLD);
  p = std::move(all);
}

enum class Combine { Min, Max, Sum, Product, Or, Overwrite };

template <class T>
bool fold(Combine op, T& cur, T val) {
  switch (op) {
    case Combine::Min:
      if (val < cur) { cur = val; return true; }
      return false;
    case Combine::Max:
      if (val > cur) { cur = val; return true; }
      return false;
    case Combine::Sum: cur = static_cast<T>(cur + val); return true;
    case Combine::Product: cur = static_cast<T>(cur * val); return true;
    case Combine::Or: cur = static_cast<T>(cur || val); return true;
    case Combine::Overwrite: cur = val; return true;
  }
  return false;
}

/// Per-destination messages for one (property, combine) site, folded by
/// target vertex so each vertex is sent at most once per superstep.
template <class T>
class Outbox {
 public:
  Outbox(const DistGraph& g, Combine op) : op_(op), out_(g.nranks) {}

  void add(int dest, int v, T val) {
    auto [it, fresh] = out_[dest].emplace(v, val);
    if (!fresh) fold(op_, it->second, val);
  }

  /// All-to-all exchange; returns the messages addressed to this rank in
  /// sender-rank order.
  std::vector<std::pair<int, T>> exchange(const DistGraph& g) {
    std::vector<int> send_counts(g.nranks), recv_counts(g.nranks);
    std::vector<std::pair<int, T>> send;
    for (int r = 0; r < g.nranks; ++r) {
      send_counts[r] = static_cast<int>(out_[r].size() * sizeof(std::pair<int, T>));
      for (const auto& kv : out_[r]) send.push_back(kv);
      out_[r].clear();
    }
    MPI_Alltoall(send_counts.data(), 1, MPI_INT, recv_counts.data(), 1, MPI_INT, MPI_COMM_WORLD);
    std::vector<int> sdispl(g.nranks, 0), rdispl(g.nranks, 0);
    for (int r = 1; r < g.nranks; ++r) {
      sdispl[r] = sdispl[r - 1] + send_counts[r - 1];
      rdispl[r] = rdispl[r - 1] + recv_counts[r - 1];
    }
    const int total = rdispl[g.nranks - 1] + recv_counts[g.nranks - 1];
    std::vector<std::pair<int, T>> recv(total / sizeof(std::pair<int, T>));
    MPI_Alltoallv(send.data(), send_counts.data(), sdispl.data(), MPI_BYTE, recv.data(),
                  recv_counts.data(), rdispl.data(), MPI_BYTE, MPI_COMM_WORLD);
    return recv;
  }

 private:
  Combine op_;
  std::vector<std::map<int, T>> out_;
};

template <class T>
MPI_Datatype mpi_type() {
  if constexpr (std::is_same_v<T, bool>) return MPI_C_BOOL;
  else if constexpr (std::is_same_v<T, int>) return MPI_INT;
  else if constexpr (std::is_same_v<T, std::int64_t>) return MPI_INT64_T;
  else if constexpr (std::is_same_v<T, float>) return MPI_FLOAT;
  else return MPI_DOUBLE;
}

template <class T>
T allreduce(T local, MPI_Op op) {
  T out{};
  MPI_Allreduce(&local, &out, 1, mpi_type<T>(), op, MPI_COMM_WORLD);
  return out;
}

/// True on every rank iff `local` is true on every rank.
inline bool all_ranks(bool local) { return allreduce<bool>(local, MPI_LAND); }

/// Shares newly claimed BFS levels: a vertex takes the smallest level any
/// rank assigned it.
inline void merge_levels(const DistGraph& g, std::vector<int>& level) {
  if (g.nranks == 1) return;
  std::vector<int> in(level.size());
  for (std::size_t i = 0; i < level.size(); ++i) in[i] = level[i] < 0 ? INT_MAX : level[i];
  MPI_Allreduce(MPI_IN_PLACE, in.data(), static_cast<int>(in.size()), MPI_INT, MPI_MIN, MPI_COMM_WORLD);
  for (std::size_t i = 0; i < level.size(); ++i) level[i] = in[i] == INT_MAX ? -1 : in[i];
}

}  // namespace sp__rt
#endif  // SP_RT_MPI

#ifdef __CUDACC__
namespace sp__rt {

#define SP_RT_CHECK(call)                                                  \
  do {                                                                     \
    cudaError_t sp__err = (call);                                          \
    if (sp__err != cudaSuccess) sp__rt::die(cudaGetErrorString(sp__err)); \
  } while (0)

/// Device-resident CSR arrays, passed to kernels by value.
struct DeviceGraph {
  int n = 0;
  int m = 0;
  int* offsets = nullptr;
  int* adj = nullptr;
  int* weights = nullptr;
  int* rev_offsets = nullptr;
  int* rev_adj = nullptr;
  int* rev_eid = nullptr;

  __host__ __device__ int num_nodes() const { return n; }
  __host__ __device__ int num_edges() const { return m; }
  __device__ int count_out_nbrs(int v) const { return offsets[v + 1] - offsets[v]; }
  __device__ int find_edge(int u, int w) const {
    int lo = offsets[u], hi = offsets[u + 1];
    while (lo < hi) {
      const int mid = lo + (hi - lo) / 2;
      if (adj[mid] < w) lo = mid + 1;
      else hi = mid;
    }
    return lo < offsets[u + 1] && adj[lo] == w ? lo : -1;
  }
  __device__ int get_edge(int u, int w) const { return find_edge(u, w); }
  __device__ bool is_an_edge(int u, int w) const { return find_edge(u, w) >= 0; }
};

inline int* upload(const std::vector<int>& v) {
  int* d = nullptr;
  SP_RT_CHECK(cudaMalloc(&d, sizeof(int) * std::max<std::size_t>(1, v.size())));
  SP_RT_CHECK(cudaMemcpy(d, v.data(), sizeof(int) * v.size(), cudaMemcpyHostToDevice));
  return d;
}

/// Copies the graph to the device once; it is never copied back.
inline DeviceGraph to_device(const Graph& g) {
  DeviceGraph d;
  d.n = g.n;
  d.m = g.m;
  d.offsets = upload(g.offsets);
  d.adj = upload(g.adj);
  d.weights = upload(g.weights);
  d.rev_offsets = upload(g.rev_offsets);
  d.rev_adj = upload(g.rev_adj);
  d.rev_eid = upload(g.rev_eid);
  return d;
}

template <class T>
T* device_alloc(std::size_t count) {
  T* d = nullptr;
  SP_RT_CHECK(cudaMalloc(&d, sizeof(T) * std::max<std::size_t>(1, count)));
  SP_RT_CHECK(cudaMemset(d, 0, sizeof(T) * std::max<std::size_t>(1, count)));
  return d;
}

template <class T, class U>
void store_device(T* addr, U value) {
  const T v = static_cast<T>(value);
  SP_RT_CHECK(cudaMemcpy(addr, &v, sizeof(T), cudaMemcpyHostToDevice));
}

template <class T>
T load_device(const T* addr) {
  T v{};
  SP_RT_CHECK(cudaMemcpy(&v, addr, sizeof(T), cudaMemcpyDeviceToHost));
  return v;
}

template <class T>
std::vector<T> download(const T* d, std::size_t count) {
  std::vector<T> h(count);
  if (count) SP_RT_CHECK(cudaMemcpy(h.data(), d, sizeof(T) * count, cudaMemcpyDeviceToHost));
  return h;
}

inline std::vector<char> download(const bool* d, std::size_t count) {
  std::vector<char> h(count);
  if (count) SP_RT_CHECK(cudaMemcpy(h.data(), d, count, cudaMemcpyDeviceToHost));
  return h;
}

__device__ inline double atomicMaxDouble(double* addr, double val) {
  auto* bits = reinterpret_cast<unsigned long long*>(addr);
  unsigned long long old = *bits, assumed;
  do {
    assumed = old;
    if (__longlong_as_double(assumed) >= val) break;
    old = atomicCAS(bits, assumed, __double_as_longlong(val));
  } while (assumed != old);
  return __longlong_as_double(old);
}

__device__ inline double atomicMinDouble(double* addr, double val) {
  auto* bits = reinterpret_cast<unsigned long long*>(addr);
  unsigned long long old = *bits, assumed;
  do {
    assumed = old;
    if (__longlong_as_double(assumed) <= val) break;
    old = atomicCAS(bits, assumed, __double_as_longlong(val));
  } while (assumed != old);
  return __longlong_as_double(old);
}

__device__ inline void atomic_add(int* addr, int v) { atomicAdd(addr, v); }
__device__ inline void atomic_add(std::int64_t* addr, std::int64_t v) {
  atomicAdd(reinterpret_cast<unsigned long long*>(addr), static_cast<unsigned long long>(v));
}
__device__ inline void atomic_add(float* addr, float v) { atomicAdd(addr, v); }
__device__ inline void atomic_add(double* addr, double v) { atomicAdd(addr, v); }

/// One level of a level-synchronous BFS: claims unvisited out-neighbors of
/// the level-`depth` vertices and sets *more when any were found.
__global__ void bfs_expand(DeviceGraph g, int* level, int depth, bool* more) {
  const unsigned v = blockIdx.x * blockDim.x + threadIdx.x;
  if (v >= static_cast<unsigned>(g.n) || level[v] != depth) return;
  for (int e = g.offsets[v]; e < g.offsets[v + 1]; ++e) {
    const int w = g.adj[e];
    if (atomicCAS(&level[w], -1, depth + 1) == -1) *more = true;
  }
}

template <class T>
__global__ void any_kernel(const T* p, int n, bool* out) {
  const int v = blockIdx.x * blockDim.x + threadIdx.x;
  if (v < n && p[v]) *out = true;
}

/// True when any of the first `n` device elements is nonzero.
template <class T>
bool device_any(const T* p, int n) {
  bool* d = device_alloc<bool>(1);
  if (n > 0) any_kernel<<<(n + 1023) / 1024, 1024>>>(p, n, d);
  const bool any = load_device(d);
  SP_RT_CHECK(cudaFree(d));
  return any;
}

}  // namespace sp__rt
#endif  // __CUDACC__
