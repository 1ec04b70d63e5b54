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

#include <gtest/gtest.h>

#include "starplat/lexer.hpp"

namespace starplat {
namespace {

TEST(Lexer, ClassifiesTokens) {
  const auto toks = tokenize("forall (v in g.nodes()) { x += 2.5; }");
  ASSERT_GE(toks.size(), 14u);
  EXPECT_TRUE(toks[0].is_keyword("forall"));
  EXPECT_TRUE(toks[1].is_punct("("));
  EXPECT_EQ(toks[2].kind, TokenKind::Identifier);
  EXPECT_TRUE(toks[3].is_keyword("in"));
  EXPECT_EQ(toks.back().kind, TokenKind::End);
  bool saw_float = false;
  for (const auto& t : toks) saw_float = saw_float || (t.kind == TokenKind::FloatLiteral && t.text == "2.5");
  EXPECT_TRUE(saw_float);
}

TEST(Lexer, TracksLineAndColumn) {
  const auto toks = tokenize("int a;\n  long b;");
  ASSERT_GE(toks.size(), 6u);
  EXPECT_EQ(toks[3].line, 2);
  EXPECT_EQ(toks[3].col, 3);
}

TEST(Lexer, SkipsComments) {
  const auto toks = tokenize("// line\nint // trailing\n  x;");
  ASSERT_EQ(toks.size(), 4u);
  EXPECT_EQ(toks[1].text, "x");
  EXPECT_EQ(toks[1].line, 3);
  EXPECT_EQ(toks[1].col, 3);
}

TEST(Lexer, RejectsReservedInfixWithPosition) {
  try {
    tokenize("int ok;\nint sp__x;");
    FAIL() << "expected LexError";
  } catch (const LexError& e) {
    ASSERT_TRUE(e.pos());
    EXPECT_EQ(e.pos()->line, 2);
    EXPECT_EQ(e.pos()->col, 8);
  }
  EXPECT_THROW(tokenize("a__b"), LexError);
}

TEST(Lexer, RejectsStrayCharacter) {
  try {
    tokenize("x = 1 $ 2;");
    FAIL() << "expected LexError";
  } catch (const LexError& e) {
    ASSERT_TRUE(e.pos());
    EXPECT_EQ(e.pos()->col, 7);
  }
}

TEST(Lexer, RecognisesMultiCharOperators) {
  const auto toks = tokenize("a <= b && c != d || e == f; x += 1; y++;");
  std::vector<std::string> ops;
  for (const auto& t : toks)
    if (t.kind == TokenKind::Operator) ops.push_back(t.text);
  for (const char* op : {"<=", "&&", "!=", "||", "==", "+=", "++"})
    EXPECT_NE(std::find(ops.begin(), ops.end(), op), ops.end()) << op;
}

}  // namespace
}  // namespace starplat
