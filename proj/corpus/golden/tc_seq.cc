// Generated by starplatc from Compute_TC (target: seq).
// Build: g++ -std=c++20 -O2 tc_seq.cc -o tc_seq
#include "runtime.h"

std::int64_t Compute_TC(const sp__rt::Graph& g, sp__rt::Output& sp__out) {
  std::int64_t triangle_count = 0;
  for (int v = 0; v < g.num_nodes(); ++v) {
    for (int sp__e1 = g.offsets[v]; sp__e1 < g.offsets[v + 1]; ++sp__e1) {
      const int u = g.adj[sp__e1];
      if (!(u < v)) continue;
      for (int sp__e2 = g.offsets[v]; sp__e2 < g.offsets[v + 1]; ++sp__e2) {
        const int w = g.adj[sp__e2];
        if (!(w > v)) continue;
        if (g.is_an_edge(u, w)) {
          triangle_count += 1;
        }
      }
    }
  }
  {
    const std::int64_t sp__ret3 = triangle_count;
    sp__out.scalar<std::int64_t>("triangle_count", triangle_count);
    sp__out.ret(sp__ret3);
    return sp__ret3;
  }
}

int main(int argc, char** argv) {
  const sp__rt::Args sp__args(argc, argv);
  const sp__rt::Graph g = sp__rt::load_graph(sp__args.graph(), sp__args.directed());
  sp__rt::Output sp__out;
  Compute_TC(g, sp__out);
  sp__out.print();
  return 0;
}
