// Generated by starplatc from Compute_SSSP_Pull (target: mpi).
// Build: mpicxx -std=c++20 -O2 sssp_pull_mpi.cc -o sssp_pull_mpi
#define SP_RT_MPI
#include "runtime.h"

void Compute_SSSP_Pull(const sp__rt::DistGraph& g, int src, sp__rt::Output& sp__out) {
  sp__rt::Prop<int> dist(g.num_nodes());
  sp__rt::Prop<bool> modified(g.num_nodes());
  sp__rt::Prop<bool> modified_nxt(g.num_nodes());
  for (int sp__v1 = 0; sp__v1 < g.num_nodes(); ++sp__v1) {
    dist[sp__v1] = INT_MAX;
    modified[sp__v1] = false;
    modified_nxt[sp__v1] = false;
  }
  modified[src] = true;
  dist[src] = 0;
  bool finished = false;
  while (!finished) {
    finished = true;
    if (g.nranks > 1) {
      sp__rt::refresh(g, dist);
      sp__rt::refresh(g, modified);
    }
    for (int v = g.local_begin; v < g.local_end; ++v) {
      for (int sp__s2 = g.rev_offsets[v]; sp__s2 < g.rev_offsets[v + 1]; ++sp__s2) {
        const int nbr = g.rev_adj[sp__s2];
        const int sp__e3 = g.rev_eid[sp__s2];
        if (!(modified[nbr] == true)) continue;
        int e = sp__e3;
        const int sp__c4 = dist[nbr] + g.weights[e];
        if (sp__c4 < dist[v]) {
          dist[v] = sp__c4;
          modified_nxt[v] = true;
          finished = false;
        }
      }
    }
    modified = modified_nxt;
    for (int sp__v5 = 0; sp__v5 < g.num_nodes(); ++sp__v5) {
      modified_nxt[sp__v5] = false;
    }
    finished = sp__rt::all_ranks(finished);
  }
  sp__out.scalar<int>("src", src);
  sp__rt::refresh(g, dist);
  sp__out.node<int>("dist", dist);
  sp__rt::refresh(g, modified);
  sp__out.node<bool>("modified", modified);
  sp__rt::refresh(g, modified_nxt);
  sp__out.node<bool>("modified_nxt", modified_nxt);
  sp__out.scalar<bool>("finished", finished);
}

int main(int argc, char** argv) {
  MPI_Init(&argc, &argv);
  const sp__rt::Args sp__args(argc, argv);
  const sp__rt::DistGraph g = sp__rt::distribute(sp__rt::load_graph(sp__args.graph(), sp__args.directed()));
  const int src = sp__args.get_node("src", g);
  sp__rt::Output sp__out;
  Compute_SSSP_Pull(g, src, sp__out);
  if (g.rank == 0) {
    sp__out.print();
  }
  MPI_Finalize();
  return 0;
}
