// Generated by starplatc from Compute_SSSP (target: omp).
// Build: g++ -std=c++20 -O2 -fopenmp sssp_omp.cc -o sssp_omp
#include "runtime.h"

void Compute_SSSP(const sp__rt::Graph& g, int src, sp__rt::Output& sp__out) {
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
      if (!(modified[v] == true)) continue;
      for (int sp__e2 = g.offsets[v]; sp__e2 < g.offsets[v + 1]; ++sp__e2) {
        const int nbr = g.adj[sp__e2];
        int e = sp__e2;
        const int sp__c3 = dist[v] + g.weights[e];
        if (sp__rt::atomic_min(&dist[nbr], sp__c3)) {
          sp__rt::atomic_store(&modified_nxt[nbr], true);
          sp__rt::atomic_store(&finished, false);
        }
      }
    }
    modified = modified_nxt;
    for (int sp__v4 = 0; sp__v4 < g.num_nodes(); ++sp__v4) {
      modified_nxt[sp__v4] = false;
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
  Compute_SSSP(g, src, sp__out);
  sp__out.print();
  return 0;
}
