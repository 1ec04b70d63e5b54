// Generated by starplatc from Compute_PR (target: seq).
// Build: g++ -std=c++20 -O2 pr_seq.cc -o pr_seq
#include "runtime.h"

void Compute_PR(const sp__rt::Graph& g, double beta, double damping, int maxIter, sp__rt::Output& sp__out) {
  sp__rt::Prop<double> pageRank(g.num_nodes());
  sp__rt::Prop<double> pageRank_nxt(g.num_nodes());
  double numNodes = g.num_nodes();
  const double sp__a1 = 1 / numNodes;
  for (int sp__v2 = 0; sp__v2 < g.num_nodes(); ++sp__v2) {
    pageRank[sp__v2] = sp__a1;
    pageRank_nxt[sp__v2] = 0;
  }
  int iterCount = 0;
  double diff = 0;
  bool converged = false;
  while (!converged) {
    diff = 0;
    for (int v = 0; v < g.num_nodes(); ++v) {
      double sum = 0;
      for (int sp__s3 = g.rev_offsets[v]; sp__s3 < g.rev_offsets[v + 1]; ++sp__s3) {
        const int nbr = g.rev_adj[sp__s3];
        sum = sum + pageRank[nbr] / g.count_out_nbrs(nbr);
      }
      double val = (1 - damping) / numNodes + damping * sum;
      double change = val - pageRank[v];
      if (change < 0) {
        change = -change;
      }
      const double sp__c4 = change;
      if (sp__c4 > diff) {
        diff = sp__c4;
      }
      pageRank_nxt[v] = val;
    }
    pageRank = pageRank_nxt;
    ++iterCount;
    converged = diff < beta || iterCount >= maxIter;
  }
  sp__out.scalar<double>("beta", beta);
  sp__out.scalar<double>("damping", damping);
  sp__out.scalar<int>("maxIter", maxIter);
  sp__out.node<double>("pageRank", pageRank);
  sp__out.node<double>("pageRank_nxt", pageRank_nxt);
  sp__out.scalar<double>("numNodes", numNodes);
  sp__out.scalar<int>("iterCount", iterCount);
  sp__out.scalar<double>("diff", diff);
  sp__out.scalar<bool>("converged", converged);
}

int main(int argc, char** argv) {
  const sp__rt::Args sp__args(argc, argv);
  const sp__rt::Graph g = sp__rt::load_graph(sp__args.graph(), sp__args.directed());
  const double beta = sp__args.get<double>("beta");
  const double damping = sp__args.get<double>("damping");
  const int maxIter = sp__args.get<int>("maxIter");
  sp__rt::Output sp__out;
  Compute_PR(g, beta, damping, maxIter, sp__out);
  sp__out.print();
  return 0;
}
