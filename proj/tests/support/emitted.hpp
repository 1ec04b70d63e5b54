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

#include "starplat/codegen.hpp"
#include "starplat/interpreter.hpp"

namespace starplat::testing {

/// True when `compiler` can build a trivial C++20 program (with -fopenmp
/// when `openmp`).
bool have_compiler(const std::string& compiler, bool openmp);

struct EmittedRun {
  bool ok = false;
  /// Program output on success, compiler or runtime errors otherwise.
  std::string output;
};

/// Writes `unit` to a scratch directory, compiles it with `compiler` and
/// runs it on `graph_path` with `args`.
EmittedRun compile_and_run(const EmittedUnit& unit, const std::string& compiler, bool openmp,
                           const std::string& graph_path, bool directed, const ArgMap& args);

}  // namespace starplat::testing
