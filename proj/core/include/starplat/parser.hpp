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

#include <string>
#include <string_view>
#include <vector>

#include "starplat/ast.hpp"
#include "starplat/lexer.hpp"

namespace starplat {

/// Recursive-descent parser for the grammar documented in the README.
/// The first grammar violation throws ParseError; there is no recovery.
ast::Program parse(const std::vector<Token>& tokens);

/// tokenize() followed by parse().
ast::Program parse_source(std::string_view source);

/// Canonical DSL text for `program`. Re-parsing the result yields a
/// structurally identical tree.
std::string pretty_print(const ast::Program& program);
std::string pretty_print(const ast::Expr& expr);

/// Parenthesised one-node-per-list rendering used by `dump-ast`.
std::string dump_sexpr(const ast::Program& program);

}  // namespace starplat
