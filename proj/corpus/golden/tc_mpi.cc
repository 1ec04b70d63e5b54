// Generated by starplatc from Compute_TC (target: mpi).
// Build: mpicxx -std=c++20 -O2 tc_mpi.cc -o tc_mpi
#define SP_RT_MPI
#include "runtime.h"

std::int64_t Compute_TC(const sp__rt::DistGraph& g, sp__rt::Output& sp__out) {
  std::int64_t triangle_count = 0;
  std::int64_t sp__acc1 = std::int64_t{};
  for (int v = g.local_begin; v < g.local_end; ++v) {
    for (int sp__e2 = g.offsets[v]; sp__e2 < g.offsets[v + 1]; ++sp__e2) {
      const int u = g.adj[sp__e2];
      if (!(u < v)) continue;
      for (int sp__e3 = g.offsets[v]; sp__e3 < g.offsets[v + 1]; ++sp__e3) {
        const int w = g.adj[sp__e3];
        if (!(w > v)) continue;
        if (g.is_an_edge(u, w)) {
          sp__acc1 += 1;
        }
      }
    }
  }
  triangle_count += sp__rt::allreduce(sp__acc1, MPI_SUM);
  {
    const std::int64_t sp__ret4 = triangle_count;
    sp__out.scalar<std::int64_t>("triangle_count", triangle_count);
    sp__out.ret(sp__ret4);
    return sp__ret4;
  }
}

int main(int argc, char** argv) {
  MPI_Init(&argc, &argv);
  const sp__rt::Args sp__args(argc, argv);
  const sp__rt::DistGraph g = sp__rt::distribute(sp__rt::load_graph(sp__args.graph(), sp__args.directed()));
  sp__rt::Output sp__out;
  Compute_TC(g, sp__out);
  if (g.rank == 0) {
    sp__out.print();
  }
  MPI_Finalize();
  return 0;
}
