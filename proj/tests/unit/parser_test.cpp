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

#include "ast_equal.hpp"
#include "generators.hpp"
#include "starplat/corpus.hpp"
#include "starplat/parser.hpp"

namespace starplat {
namespace {

using namespace ast;

TEST(Parser, SsspShape) {
  const Program p = parse_source(find_corpus_entry("sssp")->source());
  ASSERT_EQ(p.functions.size(), 1u);
  const Function& f = p.functions[0];
  EXPECT_EQ(f.name, "Compute_SSSP");
  ASSERT_EQ(f.params.size(), 2u);
  const auto& body = f.body.stmts;
  ASSERT_GE(body.size(), 8u);
  const auto* dist = body[0]->as<DeclStmt>();
  ASSERT_TRUE(dist);
  EXPECT_EQ(dist->name, "dist");
  EXPECT_TRUE(dist->type.is(DslType::Kind::PropNode));
  EXPECT_EQ(dist->type.prim, Primitive::Int);
  const auto* fp = body.back()->as<FixedPointStmt>();
  ASSERT_TRUE(fp);
  EXPECT_EQ(fp->flag, "finished");
  const auto* outer = fp->body->stmts[0]->as<ForallStmt>();
  ASSERT_TRUE(outer);
  EXPECT_TRUE(outer->filter);
  const auto* inner = outer->body->stmts[0]->as<ForallStmt>();
  ASSERT_TRUE(inner);
  EXPECT_TRUE(inner->body->stmts[1]->as<MinMaxAssign>());
}

TEST(Parser, PrecedenceAndAssociativity) {
  const Program p = parse_source("function f(int a, int b) { int x = a - b - 1 * 2; }");
  const auto* d = p.functions[0].body.stmts[0]->as<DeclStmt>();
  const auto* top = d->init->as<BinaryExpr>();
  ASSERT_TRUE(top);
  EXPECT_EQ(top->op, BinaryOp::Sub);
  EXPECT_TRUE(top->rhs->as<BinaryExpr>());
  EXPECT_EQ(top->rhs->as<BinaryExpr>()->op, BinaryOp::Mul);
  const auto* left = top->lhs->as<BinaryExpr>();
  ASSERT_TRUE(left);
  EXPECT_EQ(left->op, BinaryOp::Sub);
}

TEST(Parser, CorpusRoundTripIsStructuralFixpoint) {
  for (const auto& e : corpus()) {
    const Program a = parse_source(e.source());
    const std::string printed = pretty_print(a);
    const Program b = parse_source(printed);
    EXPECT_EQ(testing::ast_diff(a, b), std::nullopt) << e.name;
    EXPECT_EQ(pretty_print(b), printed) << e.name;
  }
}

TEST(Parser, ErrorsArePositioned) {
  try {
    parse_source("function f(Graph g) {\n  int x = ;\n}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    ASSERT_TRUE(e.pos());
    EXPECT_EQ(e.pos()->line, 2);
    EXPECT_EQ(e.pos()->col, 11);
  }
  EXPECT_THROW(parse_source("function f(Graph g) { forall (v in g.nodes() { } }"), ParseError);
  EXPECT_THROW(parse_source("function"), ParseError);
}

TEST(Parser, DumpAstIsSExpression) {
  const std::string s = dump_sexpr(parse_source("function f(Graph g) { int x = 1 + 2; }"));
  EXPECT_NE(s.find("(function f"), std::string::npos);
  EXPECT_EQ(std::count(s.begin(), s.end(), '('), std::count(s.begin(), s.end(), ')'));
}

// Property: printing then re-parsing a random expression yields the same tree.
TEST(ParserProperty, RandomExpressionsRoundTrip) {
  testing::Rng rng(0x5eed);
  for (int i = 0; i < 500; ++i) {
    const std::string src = "function f(int a, int b, int c) { bool x = " + testing::random_expr(rng, 4) + "; }";
    const Program a = parse_source(src);
    const Program b = parse_source(pretty_print(a));
    ASSERT_EQ(testing::ast_diff(a, b), std::nullopt) << src;
  }
}

}  // namespace
}  // namespace starplat
