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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "starplat/errors.hpp"

namespace starplat {

enum class TokenKind {
  Identifier,
  Keyword,
  IntLiteral,
  FloatLiteral,
  Punctuation,
  Operator,
  End,
};

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  int line = 1;
  int col = 1;
  /// Byte offset of the first character in the source.
  std::size_t offset = 0;

  SourcePos pos() const { return {line, col}; }
  bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
  bool is_punct(std::string_view t) const { return is(TokenKind::Punctuation, t); }
  bool is_op(std::string_view t) const { return is(TokenKind::Operator, t); }
  bool is_keyword(std::string_view t) const { return is(TokenKind::Keyword, t); }
};

/// Every reserved word of the language.
const std::vector<std::string_view>& keywords();
bool is_keyword(std::string_view word);

/// Identifiers containing this sequence are rejected by the lexer; the code
/// generators prefix their temporaries with it so they can never capture a
/// user identifier.
inline constexpr std::string_view kReservedSigil = "sp__";
inline constexpr std::string_view kReservedInfix = "__";

/// Splits `source` into tokens. Whitespace and `//` comments separate tokens
/// and are dropped. The returned sequence always ends with one End token.
/// Throws LexError at the first character outside the token alphabet.
std::vector<Token> tokenize(std::string_view source);

}  // namespace starplat
