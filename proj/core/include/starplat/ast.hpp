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

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "starplat/errors.hpp"
#include "starplat/types.hpp"

namespace starplat::ast {

/// Dense per-program node number; sema keys its side tables on it.
using NodeId = int;

struct Expr;
struct Stmt;
using ExprPtr = std::unique_ptr<Expr>;
using StmtPtr = std::unique_ptr<Stmt>;

// ---------------------------------------------------------------- expressions

struct Identifier {
  std::string name;
};

struct MemberAccess {
  ExprPtr object;
  std::string property;
};

struct Literal {
  enum class Kind { Int, Float, Bool, IntMax };
  Kind kind = Kind::Int;
  /// Lexeme as written; float literals print back verbatim.
  std::string text;
};

enum class UnaryOp { Not, Neg };

struct UnaryExpr {
  UnaryOp op = UnaryOp::Not;
  ExprPtr operand;
};

enum class BinaryOp { Mul, Div, Add, Sub, Lt, Le, Gt, Ge, Eq, Ne, And, Or };

struct BinaryExpr {
  BinaryOp op = BinaryOp::Add;
  ExprPtr lhs;
  ExprPtr rhs;
};

/// One call argument. Named arguments (`dist = INT_MAX`) only appear in
/// attachNodeProperty / attachEdgeProperty.
struct Argument {
  std::optional<std::string> name;
  ExprPtr value;
};

struct ProcCallExpr {
  /// Null for free calls.
  ExprPtr receiver;
  std::string method;
  std::vector<Argument> args;
};

struct Expr {
  NodeId id = -1;
  Span span;
  std::variant<Identifier, MemberAccess, Literal, UnaryExpr, BinaryExpr, ProcCallExpr> node;

  template <class T>
  const T* as() const { return std::get_if<T>(&node); }
  template <class T>
  T* as() { return std::get_if<T>(&node); }
};

// ----------------------------------------------------------------- statements

struct BlockStmt {
  std::vector<StmtPtr> stmts;
};

struct DeclStmt {
  DslType type;
  std::string name;
  ExprPtr init;  // optional
};

/// Plain `lvalue = expr`. The lvalue is an Identifier or a MemberAccess.
struct AssignStmt {
  ExprPtr lvalue;
  ExprPtr value;
};

enum class ReduceOp { Sum, Product, Count, All, Any };

/// `x += e`, `x *= e`, `x++`, `x &&= e`, `x ||= e`. `value` is null for `++`.
struct ReductionAssign {
  ExprPtr lvalue;
  ReduceOp op = ReduceOp::Sum;
  ExprPtr value;
};

enum class Comparator { Min, Max };

/// `<t0, t1, ...> = <Min(current, candidate), c1, ...>`: when `candidate`
/// beats `current`, t0 takes the candidate and each ti takes ci.
struct MinMaxAssign {
  std::vector<ExprPtr> targets;
  Comparator comparator = Comparator::Min;
  ExprPtr current;
  ExprPtr candidate;
  std::vector<ExprPtr> companions;
};

/// `forall (it in range.filter(f)) body` or its sequential twin `for`.
struct ForallStmt {
  std::string iterator;
  Span iterator_span;
  ExprPtr range;
  ExprPtr filter;  // optional
  std::unique_ptr<BlockStmt> body;
  /// True for `forall`, false for `for`.
  bool is_parallel = true;
};

struct FixedPointStmt {
  std::string flag;
  Span flag_span;
  ExprPtr convergence;
  std::unique_ptr<BlockStmt> body;
};

struct IterateInBfsStmt {
  std::string iterator;
  Span iterator_span;
  ExprPtr range;
  ExprPtr root;
  std::unique_ptr<BlockStmt> body;
  std::unique_ptr<BlockStmt> reverse_body;  // optional
};

struct IfStmt {
  ExprPtr condition;
  std::unique_ptr<BlockStmt> then_body;
  /// Either a block or, for `else if`, a block holding a single IfStmt.
  std::unique_ptr<BlockStmt> else_body;  // optional
  bool else_is_if = false;
};

struct ReturnStmt {
  ExprPtr value;  // optional
};

/// A call evaluated for effect (attachNodeProperty and friends).
struct ExprStmt {
  ExprPtr expr;
};

struct Stmt {
  NodeId id = -1;
  Span span;
  std::variant<BlockStmt, DeclStmt, AssignStmt, ReductionAssign, MinMaxAssign, ForallStmt,
               FixedPointStmt, IterateInBfsStmt, IfStmt, ReturnStmt, ExprStmt>
      node;

  template <class T>
  const T* as() const { return std::get_if<T>(&node); }
  template <class T>
  T* as() { return std::get_if<T>(&node); }
};

// -------------------------------------------------------------- declarations

struct FormalParam {
  DslType type;
  std::string name;
  Span span;
};

struct Function {
  NodeId id = -1;
  Span span;
  std::string name;
  std::vector<FormalParam> params;
  BlockStmt body;
};

struct Program {
  std::vector<Function> functions;
  /// One past the largest NodeId handed out.
  int node_count = 0;
};

std::string_view to_string(BinaryOp op);
std::string_view to_string(UnaryOp op);
std::string_view to_string(ReduceOp op);
std::string_view to_string(Comparator c);

/// Binding strength used by the parser and printer (higher binds tighter).
int precedence(BinaryOp op);

}  // namespace starplat::ast
