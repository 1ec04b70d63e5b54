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

#include "ast_equal.hpp"

#include <variant>

namespace starplat::testing {

namespace {

using namespace ast;

struct Cmp {
  std::optional<std::string> diff;

  bool fail(const std::string& where, const std::string& what) {
    if (!diff) diff = where + ": " + what;
    return false;
  }

  bool type(const DslType& a, const DslType& b, const std::string& at) {
    if (a.kind != b.kind || a.prim != b.prim || a.graph != b.graph) return fail(at, "types differ");
    return true;
  }

  bool expr(const ExprPtr& a, const ExprPtr& b, const std::string& at) {
    if (!a || !b) return (!a && !b) || fail(at, "one expression is missing");
    return expr(*a, *b, at);
  }

  bool expr(const Expr& a, const Expr& b, const std::string& at) {
    if (a.node.index() != b.node.index()) return fail(at, "expression kinds differ");
    if (auto* x = a.as<Identifier>()) return x->name == b.as<Identifier>()->name || fail(at, "identifier");
    if (auto* x = a.as<Literal>()) {
      auto* y = b.as<Literal>();
      return (x->kind == y->kind && x->text == y->text) || fail(at, "literal " + x->text + " vs " + y->text);
    }
    if (auto* x = a.as<MemberAccess>()) {
      auto* y = b.as<MemberAccess>();
      if (x->property != y->property) return fail(at, "member " + x->property + " vs " + y->property);
      return expr(x->object, y->object, at + ".object");
    }
    if (auto* x = a.as<UnaryExpr>()) {
      auto* y = b.as<UnaryExpr>();
      return (x->op == y->op || fail(at, "unary op")) && expr(x->operand, y->operand, at + ".operand");
    }
    if (auto* x = a.as<BinaryExpr>()) {
      auto* y = b.as<BinaryExpr>();
      return (x->op == y->op || fail(at, "binary op")) && expr(x->lhs, y->lhs, at + ".lhs") &&
             expr(x->rhs, y->rhs, at + ".rhs");
    }
    auto* x = a.as<ProcCallExpr>();
    auto* y = b.as<ProcCallExpr>();
    if (x->method != y->method) return fail(at, "call " + x->method + " vs " + y->method);
    if (x->args.size() != y->args.size()) return fail(at, "argument counts differ");
    if (!expr(x->receiver, y->receiver, at + ".receiver")) return false;
    for (std::size_t i = 0; i < x->args.size(); ++i) {
      const std::string ai = at + ".arg" + std::to_string(i);
      if (x->args[i].name != y->args[i].name) return fail(ai, "argument names differ");
      if (!expr(x->args[i].value, y->args[i].value, ai)) return false;
    }
    return true;
  }

  bool block(const BlockStmt* a, const BlockStmt* b, const std::string& at) {
    if (!a || !b) return (!a && !b) || fail(at, "one block is missing");
    if (a->stmts.size() != b->stmts.size()) return fail(at, "statement counts differ");
    for (std::size_t i = 0; i < a->stmts.size(); ++i)
      if (!stmt(*a->stmts[i], *b->stmts[i], at + "[" + std::to_string(i) + "]")) return false;
    return true;
  }

  bool exprs(const std::vector<ExprPtr>& a, const std::vector<ExprPtr>& b, const std::string& at) {
    if (a.size() != b.size()) return fail(at, "list lengths differ");
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!expr(a[i], b[i], at + std::to_string(i))) return false;
    return true;
  }

  bool stmt(const Stmt& a, const Stmt& b, const std::string& at) {
    if (a.node.index() != b.node.index()) return fail(at, "statement kinds differ");
    if (auto* x = a.as<BlockStmt>()) return block(x, b.as<BlockStmt>(), at);
    if (auto* x = a.as<DeclStmt>()) {
      auto* y = b.as<DeclStmt>();
      return type(x->type, y->type, at) && (x->name == y->name || fail(at, "declared names differ")) &&
             expr(x->init, y->init, at + ".init");
    }
    if (auto* x = a.as<AssignStmt>()) {
      auto* y = b.as<AssignStmt>();
      return expr(x->lvalue, y->lvalue, at + ".lvalue") && expr(x->value, y->value, at + ".value");
    }
    if (auto* x = a.as<ReductionAssign>()) {
      auto* y = b.as<ReductionAssign>();
      return (x->op == y->op || fail(at, "reduction ops differ")) && expr(x->lvalue, y->lvalue, at + ".lvalue") &&
             expr(x->value, y->value, at + ".value");
    }
    if (auto* x = a.as<MinMaxAssign>()) {
      auto* y = b.as<MinMaxAssign>();
      return (x->comparator == y->comparator || fail(at, "comparators differ")) &&
             exprs(x->targets, y->targets, at + ".target") && expr(x->current, y->current, at + ".current") &&
             expr(x->candidate, y->candidate, at + ".candidate") &&
             exprs(x->companions, y->companions, at + ".companion");
    }
    if (auto* x = a.as<ForallStmt>()) {
      auto* y = b.as<ForallStmt>();
      return (x->iterator == y->iterator || fail(at, "iterators differ")) &&
             (x->is_parallel == y->is_parallel || fail(at, "forall/for differ")) &&
             expr(x->range, y->range, at + ".range") && expr(x->filter, y->filter, at + ".filter") &&
             block(x->body.get(), y->body.get(), at + ".body");
    }
    if (auto* x = a.as<FixedPointStmt>()) {
      auto* y = b.as<FixedPointStmt>();
      return (x->flag == y->flag || fail(at, "flags differ")) &&
             expr(x->convergence, y->convergence, at + ".convergence") &&
             block(x->body.get(), y->body.get(), at + ".body");
    }
    if (auto* x = a.as<IterateInBfsStmt>()) {
      auto* y = b.as<IterateInBfsStmt>();
      return (x->iterator == y->iterator || fail(at, "iterators differ")) &&
             expr(x->range, y->range, at + ".range") && expr(x->root, y->root, at + ".root") &&
             block(x->body.get(), y->body.get(), at + ".body") &&
             block(x->reverse_body.get(), y->reverse_body.get(), at + ".reverse");
    }
    if (auto* x = a.as<IfStmt>()) {
      auto* y = b.as<IfStmt>();
      return (x->else_is_if == y->else_is_if || fail(at, "else-if shape differs")) &&
             expr(x->condition, y->condition, at + ".condition") &&
             block(x->then_body.get(), y->then_body.get(), at + ".then") &&
             block(x->else_body.get(), y->else_body.get(), at + ".else");
    }
    if (auto* x = a.as<ReturnStmt>()) return expr(x->value, b.as<ReturnStmt>()->value, at + ".value");
    return expr(a.as<ExprStmt>()->expr, b.as<ExprStmt>()->expr, at + ".expr");
  }
};

}  // namespace

std::optional<std::string> ast_diff(const ast::Program& a, const ast::Program& b) {
  Cmp c;
  if (a.functions.size() != b.functions.size()) return std::string("function counts differ");
  for (std::size_t f = 0; f < a.functions.size(); ++f) {
    const auto& x = a.functions[f];
    const auto& y = b.functions[f];
    const std::string at = "function " + x.name;
    if (x.name != y.name) return at + ": names differ";
    if (x.params.size() != y.params.size()) return at + ": parameter counts differ";
    for (std::size_t i = 0; i < x.params.size(); ++i) {
      if (x.params[i].name != y.params[i].name) return at + ": parameter names differ";
      if (!c.type(x.params[i].type, y.params[i].type, at + ".param")) return c.diff;
    }
    if (!c.block(&x.body, &y.body, at)) return c.diff;
  }
  return std::nullopt;
}

}  // namespace starplat::testing
