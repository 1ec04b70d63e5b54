// Generated by starplatc from Compute_BC (target: cuda).
// Build: nvcc -std=c++20 -O2 -arch=sm_70 bc_cuda.cu -o bc_cuda
#include "runtime.h"

constexpr unsigned sp__threads = 1024;

__global__ void sp__init1(int sp__count, double* d_BC, double sp__a0) {
  const int sp__i = blockIdx.x * blockDim.x + threadIdx.x;
  if (sp__i < sp__count) {
    d_BC[sp__i] = sp__a0;
  }
}

__global__ void sp__init3(int sp__count, double* d_sigma, double sp__a0, double* d_delta, double sp__a1) {
  const int sp__i = blockIdx.x * blockDim.x + threadIdx.x;
  if (sp__i < sp__count) {
    d_sigma[sp__i] = sp__a0;
    d_delta[sp__i] = sp__a1;
  }
}

__global__ void sp__kernel9(sp__rt::DeviceGraph g, double* d_sigma, const int* sp__level, int sp__depth) {
  const int v = blockIdx.x * blockDim.x + threadIdx.x;
  if (v < g.num_nodes() && sp__level[v] == sp__depth) {
    for (int sp__e10 = g.offsets[v]; sp__e10 < g.offsets[v + 1]; ++sp__e10) {
      const int w = g.adj[sp__e10];
      if (sp__level[w] != sp__level[v] + 1) continue;
      sp__rt::atomic_add(&d_sigma[w], d_sigma[v]);
    }
  }
}

__global__ void sp__kernel11(sp__rt::DeviceGraph g, double* d_BC, double* d_sigma, double* d_delta, int src, const int* sp__level, int sp__depth) {
  const int v = blockIdx.x * blockDim.x + threadIdx.x;
  if (v < g.num_nodes() && sp__level[v] == sp__depth) {
    for (int sp__e12 = g.offsets[v]; sp__e12 < g.offsets[v + 1]; ++sp__e12) {
      const int w = g.adj[sp__e12];
      if (sp__level[w] != sp__level[v] + 1) continue;
      d_delta[v] += d_sigma[v] / d_sigma[w] * (1 + d_delta[w]);
    }
    if (v != src) {
      d_BC[v] += d_delta[v];
    }
  }
}

__global__ void sp__kernel13(sp__rt::DeviceGraph g, double* d_BC) {
  const int v = blockIdx.x * blockDim.x + threadIdx.x;
  if (v < g.num_nodes()) {
    d_BC[v] = d_BC[v] / 2;
  }
}

void Compute_BC(const sp__rt::Graph& g, const std::vector<int>& sourceSet, bool undirected, sp__rt::Output& sp__out) {
  const sp__rt::DeviceGraph sp__dg = sp__rt::to_device(g);
  const unsigned sp__blocks = std::max(1u, (g.num_nodes() + sp__threads - 1) / sp__threads);
  double* d_BC = sp__rt::device_alloc<double>(g.num_nodes());
  double* d_sigma = sp__rt::device_alloc<double>(g.num_nodes());
  double* d_delta = sp__rt::device_alloc<double>(g.num_nodes());
  sp__init1<<<sp__blocks, sp__threads>>>(g.num_nodes(), d_BC, 0);
  SP_RT_CHECK(cudaGetLastError());
  for (std::size_t sp__i2 = 0; sp__i2 < sourceSet.size(); ++sp__i2) {
    const int src = sourceSet[sp__i2];
    sp__init3<<<sp__blocks, sp__threads>>>(g.num_nodes(), d_sigma, 0, d_delta, 0);
    SP_RT_CHECK(cudaGetLastError());
    sp__rt::store_device(d_sigma + src, 1);
    {
      const int sp__root8 = src;
      int* sp__level4 = sp__rt::device_alloc<int>(g.num_nodes());
      bool* sp__more5 = sp__rt::device_alloc<bool>(1);
      SP_RT_CHECK(cudaMemset(sp__level4, 0xff, sizeof(int) * g.num_nodes()));
      sp__rt::store_device(sp__level4 + sp__root8, 0);
      int sp__depth7 = 0;
      bool sp__more_h6 = true;
      while (sp__more_h6) {
        sp__rt::store_device(sp__more5, false);
        sp__rt::bfs_expand<<<sp__blocks, sp__threads>>>(sp__dg, sp__level4, sp__depth7, sp__more5);
        sp__kernel9<<<sp__blocks, sp__threads>>>(sp__dg, d_sigma, sp__level4, sp__depth7);
        SP_RT_CHECK(cudaGetLastError());
        sp__more_h6 = sp__rt::load_device(sp__more5);
        ++sp__depth7;
      }
      for (int sp__r = sp__depth7 - 1; sp__r >= 0; --sp__r) {
        sp__kernel11<<<sp__blocks, sp__threads>>>(sp__dg, d_BC, d_sigma, d_delta, src, sp__level4, sp__r);
        SP_RT_CHECK(cudaGetLastError());
      }
      SP_RT_CHECK(cudaFree(sp__more5));
      SP_RT_CHECK(cudaFree(sp__level4));
    }
  }
  if (undirected) {
    sp__kernel13<<<sp__blocks, sp__threads>>>(sp__dg, d_BC);
    SP_RT_CHECK(cudaGetLastError());
  }
  sp__out.scalar<bool>("undirected", undirected);
  sp__out.node<double>("BC", sp__rt::download(d_BC, g.num_nodes()));
  sp__out.node<double>("sigma", sp__rt::download(d_sigma, g.num_nodes()));
  sp__out.node<double>("delta", sp__rt::download(d_delta, g.num_nodes()));
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
