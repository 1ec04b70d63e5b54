// Generated by starplatc from Compute_SSSP_Pull (target: omp).
// Build: g++ -std=c++20 -O2 -fopenmp sssp_pull_omp.cc -o sssp_pull_omp
#include "runtime.h"

void Compute_SSSP_Pull(const sp__rt::Graph& g, int src, sp__rt::Output& sp__out) {
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
    #pragma omp parallel for schedule(dynamic)
    for (int v = 0; v < g.num_nodes(); ++v) {
      for (int sp__s2 = g.rev_offsets[v]; sp__s2 < g.rev_offsets[v + 1]; ++sp__s2) {
        const int nbr = g.rev_adj[sp__s2];
        const int sp__e3 = g.rev_eid[sp__s2];
        if (!(modified[nbr] == true)) continue;
        int e = sp__e3;
        const int sp__c4 = dist[nbr] + g.weights[e];
        if (sp__c4 < dist[v]) {
          dist[v] = sp__c4;
          modified_nxt[v] = true;
          sp__rt::atomic_store(&finished, false);
        }
      }
    }
    modified = modified_nxt;
    for (int sp__v5 = 0; sp__v5 < g.num_nodes(); ++sp__v5) {
      modified_nxt[sp__v5] = false;
    }
  }
  sp__out.scalar<int>("src", src);
  sp__out.node<int>("dist", dist);
  sp__out.node<bool>("modified", modified);
  sp__out.node<bool>("modified_nxt", modified_nxt);
  sp__out.scalar<bool>("finished", finished);
}

int main(int argc, char** argv) {
  const sp__rt::Args sp__args(argc, argv);
  const sp__rt::Graph g = sp__rt::load_graph(sp__args.graph(), sp__args.directed());
  const int src = sp__args.get_node("src", g);
  sp__rt::Output sp__out;
  Compute_SSSP_Pull(g, src, sp__out);
  sp__out.print();
  return 0;
}
