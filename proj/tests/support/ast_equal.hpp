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

#include "starplat/ast.hpp"

namespace starplat::testing {

/// Node-by-node structural comparison ignoring ids and source spans.
/// Returns a path to the first difference, or nullopt when equal.
std::optional<std::string> ast_diff(const ast::Program& a, const ast::Program& b);

}  // namespace starplat::testing
