// Generated by starplatc from Compute_SSSP_Pull (target: cuda).
// Build: nvcc -std=c++20 -O2 -arch=sm_70 sssp_pull_cuda.cu -o sssp_pull_cuda
#include "runtime.h"

constexpr unsigned sp__threads = 1024;

__global__ void sp__init1(int sp__count, int* d_dist, int sp__a0, bool* d_modified, bool sp__a1, bool* d_modified_nxt, bool sp__a2) {
  const int sp__i = blockIdx.x * blockDim.x + threadIdx.x;
  if (sp__i < sp__count) {
    d_dist[sp__i] = sp__a0;
    d_modified[sp__i] = sp__a1;
    d_modified_nxt[sp__i] = sp__a2;
  }
}

__global__ void sp__kernel2(sp__rt::DeviceGraph g, int* d_dist, bool* d_modified, bool* d_modified_nxt, bool* d_finished) {
  const int v = blockIdx.x * blockDim.x + threadIdx.x;
  if (v < g.num_nodes()) {
    for (int sp__s3 = g.rev_offsets[v]; sp__s3 < g.rev_offsets[v + 1]; ++sp__s3) {
      const int nbr = g.rev_adj[sp__s3];
      const int sp__e4 = g.rev_eid[sp__s3];
      if (!(d_modified[nbr] == true)) continue;
      int e = sp__e4;
      const int sp__c5 = d_dist[nbr] + g.weights[e];
      if (sp__c5 < d_dist[v]) {
        d_dist[v] = sp__c5;
        d_modified_nxt[v] = true;
        *d_finished = false;
      }
    }
  }
}

__global__ void sp__init6(int sp__count, bool* d_modified_nxt, bool sp__a0) {
  const int sp__i = blockIdx.x * blockDim.x + threadIdx.x;
  if (sp__i < sp__count) {
    d_modified_nxt[sp__i] = sp__a0;
  }
}

void Compute_SSSP_Pull(const sp__rt::Graph& g, int src, sp__rt::Output& sp__out) {
  const sp__rt::DeviceGraph sp__dg = sp__rt::to_device(g);
  const unsigned sp__blocks = std::max(1u, (g.num_nodes() + sp__threads - 1) / sp__threads);
  int* d_dist = sp__rt::device_alloc<int>(g.num_nodes());
  bool* d_modified = sp__rt::device_alloc<bool>(g.num_nodes());
  bool* d_modified_nxt = sp__rt::device_alloc<bool>(g.num_nodes());
  sp__init1<<<sp__blocks, sp__threads>>>(g.num_nodes(), d_dist, INT_MAX, d_modified, false, d_modified_nxt, false);
  SP_RT_CHECK(cudaGetLastError());
  sp__rt::store_device(d_modified + src, true);
  sp__rt::store_device(d_dist + src, 0);
  bool finished = false;
  bool* d_finished = sp__rt::device_alloc<bool>(1);
  while (!finished) {
    finished = true;
    SP_RT_CHECK(cudaMemcpy(d_finished, &finished, sizeof(bool), cudaMemcpyHostToDevice));
    sp__kernel2<<<sp__blocks, sp__threads>>>(sp__dg, d_dist, d_modified, d_modified_nxt, d_finished);
    SP_RT_CHECK(cudaGetLastError());
    SP_RT_CHECK(cudaMemcpy(&finished, d_finished, sizeof(bool), cudaMemcpyDeviceToHost));
    SP_RT_CHECK(cudaMemcpy(d_modified, d_modified_nxt, sizeof(bool) * g.num_nodes(), cudaMemcpyDeviceToDevice));
    sp__init6<<<sp__blocks, sp__threads>>>(g.num_nodes(), d_modified_nxt, false);
    SP_RT_CHECK(cudaGetLastError());
  }
  sp__out.scalar<int>("src", src);
  sp__out.node<int>("dist", sp__rt::download(d_dist, g.num_nodes()));
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
