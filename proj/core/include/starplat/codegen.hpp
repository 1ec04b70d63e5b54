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

#include "starplat/sema.hpp"

namespace starplat {

enum class Target { Seq, Omp, Mpi, Cuda };
enum class Schedule { Dynamic, Static };

std::string_view to_string(Target t);
/// "seq", "omp", "mpi" or "cuda"; nullopt otherwise.
std::optional<Target> parse_target(std::string_view name);

struct EmitOptions {
  Target target = Target::Seq;
  /// OpenMP schedule clause of parallel loops.
  Schedule schedule = Schedule::Dynamic;
  /// Wall-clock timing around the function call in main().
  bool timing = true;
  /// Base of the output file name (`<name>_<target>.cc`); defaults to the
  /// lower-cased function name.
  std::string name;
  /// Function main() calls; the first one when empty.
  std::string function;
};

struct EmittedUnit {
  /// `<name>_<target>.cc` or `.cu`.
  std::string file_name;
  std::string source;
  /// Shipped runtime header, written beside the source as runtime.h.
  std::string header;
  /// Suggested compile command, also present as a comment in `source`.
  std::string build_hints;
};

/// Emits `tp` for `options.target`. Deterministic: equal inputs give
/// byte-identical units. Throws EmitError for constructs the target cannot
/// express.
EmittedUnit emit(const TypedProgram& tp, const EmitOptions& options);

EmittedUnit emit_sequential(const TypedProgram& tp);
EmittedUnit emit_openmp(const TypedProgram& tp, Schedule schedule = Schedule::Dynamic);
EmittedUnit emit_mpi(const TypedProgram& tp);
/// `plan` must come from analyze_transfers for the emitted function.
EmittedUnit emit_cuda(const TypedProgram& tp, const TransferPlan& plan);

/// Text of runtime.h.
std::string_view runtime_header();

}  // namespace starplat
