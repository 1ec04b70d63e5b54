// Copyright 2026 The StarPlat Compiler Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Textbook implementations used to validate program results. They share no
// code with the interpreter.

#include <cstdint>
#include <vector>

#include "starplat/graph.hpp"

namespace starplat {

/// Priority-queue Dijkstra over non-negative weights. Unreachable vertices
/// get INT_MAX. Throws RangeError for an invalid source or negative weight.
std::vector<std::int64_t> oracle_dijkstra(const CsrGraph& g, int src);

/// Betweenness from `sources` by explicit shortest-path counting between
/// every (s, t) pair. Undirected graphs count each pair once (the sum over
/// ordered pairs is halved). Throws SizeError when n > 64.
std::vector<double> oracle_brandes(const CsrGraph& g, const std::vector<int>& sources);

/// `iters` rounds of r' = (1 - d)/n + d * M r with a dense transition matrix
/// M[v][u] = (#edges u->v) / outdeg(u), starting from 1/n. Vertices without
/// out-edges leak their rank. Throws SizeError when n > 4096.
std::vector<double> oracle_pagerank_power(const CsrGraph& g, double damping, int iters);

/// Number of vertex triples u < v < w pairwise adjacent in the underlying
/// simple undirected graph. Throws SizeError when n > 4096.
std::int64_t oracle_triangles_enum(const CsrGraph& g);

}  // namespace starplat
