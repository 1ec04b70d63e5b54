// Generated by starplatc from Compute_BC (target: seq).
// Build: g++ -std=c++20 -O2 bc_seq.cc -o bc_seq
#include "runtime.h"

void Compute_BC(const sp__rt::Graph& g, const std::vector<int>& sourceSet, bool undirected, sp__rt::Output& sp__out) {
  sp__rt::Prop<double> BC(g.num_nodes());
  sp__rt::Prop<double> sigma(g.num_nodes());
  sp__rt::Prop<double> delta(g.num_nodes());
  for (int sp__v1 = 0; sp__v1 < g.num_nodes(); ++sp__v1) {
    BC[sp__v1] = 0;
  }
  for (std::size_t sp__i2 = 0; sp__i2 < sourceSet.size(); ++sp__i2) {
    const int src = sourceSet[sp__i2];
    for (int sp__v3 = 0; sp__v3 < g.num_nodes(); ++sp__v3) {
      sigma[sp__v3] = 0;
      delta[sp__v3] = 0;
    }
    sigma[src] = 1;
    {
      const int sp__root4 = src;
      std::vector<int> sp__level5(g.num_nodes(), -1);
      std::vector<std::vector<int>> sp__levels6{{sp__root4}};
      sp__level5[sp__root4] = 0;
      for (std::size_t sp__d7 = 0; sp__d7 < sp__levels6.size(); ++sp__d7) {
        std::vector<int> sp__next8;
        for (const int sp__u9 : sp__levels6[sp__d7]) {
          for (int sp__e10 = g.offsets[sp__u9]; sp__e10 < g.offsets[sp__u9 + 1]; ++sp__e10) {
            const int sp__w11 = g.adj[sp__e10];
            if (sp__level5[sp__w11] < 0) {
              sp__level5[sp__w11] = static_cast<int>(sp__d7) + 1;
              sp__next8.push_back(sp__w11);
            }
          }
        }
        std::sort(sp__next8.begin(), sp__next8.end());
        for (std::size_t sp__i12 = 0; sp__i12 < sp__levels6[sp__d7].size(); ++sp__i12) {
          const int v = sp__levels6[sp__d7][sp__i12];
          for (int sp__e13 = g.offsets[v]; sp__e13 < g.offsets[v + 1]; ++sp__e13) {
            const int w = g.adj[sp__e13];
            if (sp__level5[w] != sp__level5[v] + 1) continue;
            sigma[w] += sigma[v];
          }
        }
        if (!sp__next8.empty()) sp__levels6.push_back(std::move(sp__next8));
      }
      for (std::size_t sp__d7 = sp__levels6.size(); sp__d7-- > 0;) {
        for (std::size_t sp__i14 = 0; sp__i14 < sp__levels6[sp__d7].size(); ++sp__i14) {
          const int v = sp__levels6[sp__d7][sp__i14];
          for (int sp__e15 = g.offsets[v]; sp__e15 < g.offsets[v + 1]; ++sp__e15) {
            const int w = g.adj[sp__e15];
            if (sp__level5[w] != sp__level5[v] + 1) continue;
            delta[v] += sigma[v] / sigma[w] * (1 + delta[w]);
          }
          if (v != src) {
            BC[v] += delta[v];
          }
        }
      }
    }
  }
  if (undirected) {
    for (int v = 0; v < g.num_nodes(); ++v) {
      BC[v] = BC[v] / 2;
    }
  }
  sp__out.scalar<bool>("undirected", undirected);
  sp__out.node<double>("BC", BC);
  sp__out.node<double>("sigma", sigma);
  sp__out.node<double>("delta", delta);
}

int main(int argc, char** argv) {
  const sp__rt::Args sp__args(argc, argv);
  const sp__rt::Graph g = sp__rt::load_graph(sp__args.graph(), sp__args.directed());
  const std::vector<int> sourceSet = sp__args.get_set("sourceSet", g);
  const bool undirected = sp__args.get<bool>("undirected");
  sp__rt::Output sp__out;
  Compute_BC(g, sourceSet, undirected, sp__out);
  sp__out.print();
  return 0;
}
