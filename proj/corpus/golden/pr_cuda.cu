// Generated by starplatc from Compute_PR (target: cuda).
// Build: nvcc -std=c++20 -O2 -arch=sm_70 pr_cuda.cu -o pr_cuda
#include "runtime.h"

constexpr unsigned sp__threads = 1024;

__global__ void sp__init1(int sp__count, double* d_pageRank, double sp__a0, double* d_pageRank_nxt, double sp__a1) {
  const int sp__i = blockIdx.x * blockDim.x + threadIdx.x;
  if (sp__i < sp__count) {
    d_pageRank[sp__i] = sp__a0;
    d_pageRank_nxt[sp__i] = sp__a1;
  }
}

__global__ void sp__kernel2(sp__rt::DeviceGraph g, double damping, double* d_pageRank, double* d_pageRank_nxt, double numNodes, double* d_diff) {
  const int v = blockIdx.x * blockDim.x + threadIdx.x;
  if (v < g.num_nodes()) {
    double sum = 0;
    for (int sp__s3 = g.rev_offsets[v]; sp__s3 < g.rev_offsets[v + 1]; ++sp__s3) {
      const int nbr = g.rev_adj[sp__s3];
      sum = sum + d_pageRank[nbr] / g.count_out_nbrs(nbr);
    }
    double val = (1 - damping) / numNodes + damping * sum;
    double change = val - d_pageRank[v];
    if (change < 0) {
      change = -change;
    }
    const double sp__c4 = change;
    sp__rt::atomicMaxDouble(d_diff, sp__c4);
    d_pageRank_nxt[v] = val;
  }
}

void Compute_PR(const sp__rt::Graph& g, double beta, double damping, int maxIter, sp__rt::Output& sp__out) {
  const sp__rt::DeviceGraph sp__dg = sp__rt::to_device(g);
  const unsigned sp__blocks = std::max(1u, (g.num_nodes() + sp__threads - 1) / sp__threads);
  double* d_pageRank = sp__rt::device_alloc<double>(g.num_nodes());
  double* d_pageRank_nxt = sp__rt::device_alloc<double>(g.num_nodes());
  double numNodes = g.num_nodes();
  sp__init1<<<sp__blocks, sp__threads>>>(g.num_nodes(), d_pageRank, 1 / numNodes, d_pageRank_nxt, 0);
  SP_RT_CHECK(cudaGetLastError());
  int iterCount = 0;
  double diff = 0;
  double* d_diff = sp__rt::device_alloc<double>(1);
  bool converged = false;
  while (!converged) {
    diff = 0;
    SP_RT_CHECK(cudaMemcpy(d_diff, &diff, sizeof(double), cudaMemcpyHostToDevice));
    sp__kernel2<<<sp__blocks, sp__threads>>>(sp__dg, damping, d_pageRank, d_pageRank_nxt, numNodes, d_diff);
    SP_RT_CHECK(cudaGetLastError());
    SP_RT_CHECK(cudaMemcpy(&diff, d_diff, sizeof(double), cudaMemcpyDeviceToHost));
    SP_RT_CHECK(cudaMemcpy(d_pageRank, d_pageRank_nxt, sizeof(double) * g.num_nodes(), cudaMemcpyDeviceToDevice));
    ++iterCount;
    converged = diff < beta || iterCount >= maxIter;
  }
  sp__out.scalar<double>("beta", beta);
  sp__out.scalar<double>("damping", damping);
  sp__out.scalar<int>("maxIter", maxIter);
  sp__out.node<double>("pageRank", sp__rt::download(d_pageRank, g.num_nodes()));
  sp__out.node<double>("pageRank_nxt", sp__rt::download(d_pageRank_nxt, g.num_nodes()));
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
