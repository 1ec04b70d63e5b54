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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "starplat/graph.hpp"
#include "starplat/interpreter.hpp"
#include "starplat/value.hpp"

namespace starplat {

enum class OracleKind { Dijkstra, Brandes, PageRankPower, TriangleEnum };

struct ArgSpec {
  std::string name;
  std::string description;
};

/// Fixture graph shipped under corpus/graphs/.
struct Fixture {
  std::string name;
  /// File name relative to corpus/graphs/.
  std::string file;
  bool directed = true;
  int n = 0;
};

struct CorpusEntry {
  std::string name;
  /// Path relative to the corpus directory.
  std::string file;
  std::string function;
  std::vector<ArgSpec> args;
  OracleKind oracle = OracleKind::Dijkstra;
  /// Fixture names the entry is tested on.
  std::vector<std::string> graphs;
  /// Absolute per-value tolerance against the oracle and across engines.
  double tolerance = 0.0;
  /// Load fixtures as undirected regardless of their natural direction.
  bool undirected = false;

  std::string_view source() const;
  /// Arguments used by tests and benchmarks on `g`.
  ArgMap default_args(const CsrGraph& g) const;
  /// Run options for `g`; raises the fixedPoint cap when the program's own
  /// iteration bound exceeds the default one.
  RunOptions run_options(const CsrGraph& g) const;
};

/// The five shipped programs: sssp, sssp_pull, bc, pr, tc.
const std::vector<CorpusEntry>& corpus();
const CorpusEntry* find_corpus_entry(std::string_view name);

/// Additional programs used by codegen tests (currently "reduction").
std::string_view corpus_snippet(std::string_view name);

const std::vector<Fixture>& fixtures();
const Fixture* find_fixture(std::string_view name);
/// Loads `f` from `corpus_dir`/graphs, honouring `entry.undirected`.
CsrGraph load_fixture(const std::string& corpus_dir, const Fixture& f, const CorpusEntry* entry = nullptr);

/// Compares `r` against the entry's oracle; nullopt on agreement, otherwise
/// the first mismatch.
std::optional<std::string> check_oracle(const CorpusEntry& entry, const CsrGraph& g, const ArgMap& args,
                                        const RunResult& r);

}  // namespace starplat
