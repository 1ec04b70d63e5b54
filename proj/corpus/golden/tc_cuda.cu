// Generated by starplatc from Compute_TC (target: cuda).
// Build: nvcc -std=c++20 -O2 -arch=sm_70 tc_cuda.cu -o tc_cuda
#include "runtime.h"

constexpr unsigned sp__threads = 1024;

__global__ void sp__kernel1(sp__rt::DeviceGraph g, std::int64_t* d_triangle_count) {
  const int v = blockIdx.x * blockDim.x + threadIdx.x;
  if (v < g.num_nodes()) {
    for (int sp__e2 = g.offsets[v]; sp__e2 < g.offsets[v + 1]; ++sp__e2) {
      const int u = g.adj[sp__e2];
      if (!(u < v)) continue;
      for (int sp__e3 = g.offsets[v]; sp__e3 < g.offsets[v + 1]; ++sp__e3) {
        const int w = g.adj[sp__e3];
        if (!(w > v)) continue;
        if (g.is_an_edge(u, w)) {
          sp__rt::atomic_add(d_triangle_count, 1);
        }
      }
    }
  }
}

std::int64_t Compute_TC(const sp__rt::Graph& g, sp__rt::Output& sp__out) {
  const sp__rt::DeviceGraph sp__dg = sp__rt::to_device(g);
  const unsigned sp__blocks = std::max(1u, (g.num_nodes() + sp__threads - 1) / sp__threads);
  std::int64_t triangle_count = 0;
  std::int64_t* d_triangle_count = sp__rt::device_alloc<std::int64_t>(1);
  sp__rt::store_device(d_triangle_count, triangle_count);
  sp__kernel1<<<sp__blocks, sp__threads>>>(sp__dg, d_triangle_count);
  SP_RT_CHECK(cudaGetLastError());
  {
    const std::int64_t sp__ret4 = triangle_count;
    triangle_count = sp__rt::load_device(d_triangle_count);
    sp__out.scalar<std::int64_t>("triangle_count", triangle_count);
    sp__out.ret(sp__ret4);
    return sp__ret4;
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
