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

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "starplat/graph.hpp"
#include "starplat/sema.hpp"
#include "starplat/value.hpp"

namespace starplat {

/// Parameter values by name, as text (`src=0`, `sourceSet=0,3,5`).
using ArgMap = std::map<std::string, std::string>;

struct RunOptions {
  /// fixedPoint iteration cap; unset means 2n + 16.
  std::optional<long long> max_iterations;
  /// Function to run; empty selects the first one.
  std::string function;
};

long long default_iteration_cap(const CsrGraph& g);

/// Sequential reference execution of `tp` on `g`.
///
/// Parallel loops run their iterations in ascending vertex order and
/// neighbour lists in CSR order; every write is visible immediately.
/// Throws RuntimeError for missing arguments, arithmetic faults and a
/// fixedPoint that exceeds the iteration cap.
RunResult run(const TypedProgram& tp, const CsrGraph& g, const ArgMap& args,
              const RunOptions& options = {});

}  // namespace starplat
