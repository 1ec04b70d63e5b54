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

#include "starplat/lexer.hpp"

#include <algorithm>
#include <array>

namespace starplat {
namespace {

constexpr bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }
constexpr bool is_alpha(char c) noexcept {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
constexpr bool is_alnum(char c) noexcept { return is_alpha(c) || is_digit(c); }
constexpr bool is_space(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Longest match first.
constexpr std::array<std::string_view, 19> kOperators = {
    "&&=", "||=", "==", "!=", "<=", ">=", "&&", "||", "+=", "*=",
    "++",  "=",   "<",  ">",  "+",  "-",  "*",  "/",  "!",
};

constexpr std::string_view kPunctuation = "(){},;:.";

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_trivia();
      if (at_end()) {
        out.push_back(Token{TokenKind::End, "", line_, col_, pos_});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_trivia() {
    while (!at_end()) {
      if (is_space(peek())) {
        advance();
      } else if (peek() == '/' && peek(1) == '/') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  Token make(TokenKind kind, std::size_t start, int line, int col) const {
    return Token{kind, std::string(src_.substr(start, pos_ - start)), line, col, start};
  }

  Token next() {
    const std::size_t start = pos_;
    const int line = line_;
    const int col = col_;
    const char c = peek();

    if (is_alpha(c)) {
      while (is_alnum(peek())) advance();
      std::string_view word = src_.substr(start, pos_ - start);
      if (auto at = word.find(kReservedInfix); at != std::string_view::npos) {
        throw LexError("identifier '" + std::string(word) +
                           "' uses the reserved sequence '__' (offending char '_')",
                       SourcePos{line, col + static_cast<int>(at) + 1});
      }
      return make(is_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier, start,
                  line, col);
    }

    if (is_digit(c)) return number(start, line, col);

    for (std::string_view op : kOperators) {
      if (src_.substr(pos_, op.size()) == op) {
        for (std::size_t i = 0; i < op.size(); ++i) advance();
        return make(TokenKind::Operator, start, line, col);
      }
    }

    if (kPunctuation.find(c) != std::string_view::npos) {
      advance();
      return make(TokenKind::Punctuation, start, line, col);
    }

    std::string shown = (static_cast<unsigned char>(c) < 0x20 || static_cast<unsigned char>(c) >= 0x7f)
                            ? "\\x" + std::to_string(static_cast<unsigned char>(c))
                            : std::string(1, c);
    throw LexError("unexpected character '" + shown + "'", SourcePos{line, col});
  }

  Token number(std::size_t start, int line, int col) {
    bool is_float = false;
    while (is_digit(peek())) advance();
    if (peek() == '.' && is_digit(peek(1))) {
      is_float = true;
      advance();
      while (is_digit(peek())) advance();
    }
    if ((peek() == 'e' || peek() == 'E') &&
        (is_digit(peek(1)) || ((peek(1) == '+' || peek(1) == '-') && is_digit(peek(2))))) {
      is_float = true;
      advance();
      if (peek() == '+' || peek() == '-') advance();
      while (is_digit(peek())) advance();
    }
    if (is_alpha(peek())) {
      throw LexError(std::string("unexpected character '") + peek() + "' in number",
                     SourcePos{line_, col_});
    }
    return make(is_float ? TokenKind::FloatLiteral : TokenKind::IntLiteral, start, line, col);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Keyword: return "keyword";
    case TokenKind::IntLiteral: return "integer-literal";
    case TokenKind::FloatLiteral: return "float-literal";
    case TokenKind::Punctuation: return "punctuation";
    case TokenKind::Operator: return "operator";
    case TokenKind::End: return "end of input";
  }
  return "?";
}

const std::vector<std::string_view>& keywords() {
  static const std::vector<std::string_view> kw = {
      "function", "forall",   "for",     "in",     "filter", "fixedPoint",
      "until",    "iterateInBFS", "iterateInReverse", "from", "if", "else",
      "return",   "Min",      "Max",     "propNode", "propEdge", "Graph",
      "node",     "edge",     "int",     "bool",   "long",   "float",
      "double",   "True",     "False",   "INT_MAX", "SetN",  "SetE",
      "List",
  };
  return kw;
}

bool is_keyword(std::string_view word) {
  const auto& kw = keywords();
  return std::find(kw.begin(), kw.end(), word) != kw.end();
}

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

}  // namespace starplat
