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

#include <sstream>
#include <string>

#include "starplat/parser.hpp"

namespace starplat {
namespace {

using namespace ast;

constexpr int kAboveComparison = 4;

// Precedence of the outermost operator of `e`; atoms bind tightest.
int binding_of(const Expr& e) {
  if (auto* b = e.as<BinaryExpr>()) return precedence(b->op);
  if (e.as<UnaryExpr>()) return 6;
  return 7;
}

class ExprPrinter {
 public:
  std::string print(const Expr& e) {
    std::ostringstream os;
    emit(os, e);
    return os.str();
  }

  void emit(std::ostream& os, const Expr& e) {
    std::visit([&](const auto& n) { emit_node(os, n); }, e.node);
  }

  // Emits `e`, parenthesised when it binds looser than `min_binding`.
  void emit_at(std::ostream& os, const Expr& e, int min_binding) {
    if (binding_of(e) < min_binding) {
      os << '(';
      emit(os, e);
      os << ')';
    } else {
      emit(os, e);
    }
  }

 private:
  void emit_node(std::ostream& os, const Identifier& n) { os << n.name; }
  void emit_node(std::ostream& os, const Literal& n) { os << n.text; }

  void emit_node(std::ostream& os, const MemberAccess& n) {
    emit_at(os, *n.object, 7);
    os << '.' << n.property;
  }

  void emit_node(std::ostream& os, const UnaryExpr& n) {
    os << to_string(n.op);
    emit_at(os, *n.operand, 6);
  }

  void emit_node(std::ostream& os, const BinaryExpr& n) {
    const int p = precedence(n.op);
    emit_at(os, *n.lhs, p);
    os << ' ' << to_string(n.op) << ' ';
    emit_at(os, *n.rhs, p + 1);
  }

  void emit_node(std::ostream& os, const ProcCallExpr& n) {
    if (n.receiver) {
      emit_at(os, *n.receiver, 7);
      os << '.';
    }
    os << n.method << '(';
    for (std::size_t i = 0; i < n.args.size(); ++i) {
      if (i) os << ", ";
      if (n.args[i].name) os << *n.args[i].name << " = ";
      emit(os, *n.args[i].value);
    }
    os << ')';
  }
};

class ProgramPrinter {
 public:
  std::string print(const Program& p) {
    for (std::size_t i = 0; i < p.functions.size(); ++i) {
      if (i) os_ << '\n';
      function(p.functions[i]);
    }
    return os_.str();
  }

 private:
  void indent() { os_ << std::string(depth_ * 2, ' '); }
  std::string expr(const Expr& e) { return ExprPrinter{}.print(e); }

  void function(const Function& fn) {
    os_ << "function " << fn.name << '(';
    for (std::size_t i = 0; i < fn.params.size(); ++i) {
      if (i) os_ << ", ";
      os_ << to_string(fn.params[i].type) << ' ' << fn.params[i].name;
    }
    os_ << ") ";
    block(fn.body);
    os_ << '\n';
  }

  // Prints `{ ... }` starting at the current column; no trailing newline.
  void block(const BlockStmt& b) {
    os_ << "{\n";
    ++depth_;
    for (const auto& s : b.stmts) statement(*s);
    --depth_;
    indent();
    os_ << '}';
  }

  void statement(const Stmt& s) {
    indent();
    std::visit([&](const auto& n) { stmt(n); }, s.node);
  }

  void stmt(const BlockStmt& n) {
    block(n);
    os_ << '\n';
  }

  void stmt(const DeclStmt& n) {
    os_ << to_string(n.type) << ' ' << n.name;
    if (n.init) os_ << " = " << expr(*n.init);
    os_ << ";\n";
  }

  void stmt(const AssignStmt& n) { os_ << expr(*n.lvalue) << " = " << expr(*n.value) << ";\n"; }

  void stmt(const ReductionAssign& n) {
    os_ << expr(*n.lvalue);
    if (n.op == ReduceOp::Count) {
      os_ << "++;\n";
    } else {
      os_ << ' ' << to_string(n.op) << ' ' << expr(*n.value) << ";\n";
    }
  }

  void stmt(const MinMaxAssign& n) {
    os_ << '<';
    for (std::size_t i = 0; i < n.targets.size(); ++i) {
      if (i) os_ << ", ";
      os_ << expr(*n.targets[i]);
    }
    os_ << "> = <" << to_string(n.comparator) << '(' << expr(*n.current) << ", "
        << expr(*n.candidate) << ')';
    for (const auto& c : n.companions) {
      std::ostringstream cs;
      ExprPrinter{}.emit_at(cs, *c, kAboveComparison);
      os_ << ", " << cs.str();
    }
    os_ << ">;\n";
  }

  void stmt(const ForallStmt& n) {
    os_ << (n.is_parallel ? "forall" : "for") << " (" << n.iterator << " in " << expr(*n.range);
    if (n.filter) os_ << ".filter(" << expr(*n.filter) << ')';
    os_ << ") ";
    block(*n.body);
    os_ << '\n';
  }

  void stmt(const FixedPointStmt& n) {
    os_ << "fixedPoint until (" << n.flag << ": " << expr(*n.convergence) << ") ";
    block(*n.body);
    os_ << '\n';
  }

  void stmt(const IterateInBfsStmt& n) {
    os_ << "iterateInBFS (" << n.iterator << " in " << expr(*n.range) << " from "
        << expr(*n.root) << ") ";
    block(*n.body);
    if (n.reverse_body) {
      os_ << " iterateInReverse ";
      block(*n.reverse_body);
    }
    os_ << '\n';
  }

  void if_chain(const IfStmt& n) {
    os_ << "if (" << expr(*n.condition) << ") ";
    block(*n.then_body);
    if (n.else_body) {
      os_ << " else ";
      if (n.else_is_if) {
        if_chain(*n.else_body->stmts.front()->as<IfStmt>());
        return;
      }
      block(*n.else_body);
    }
  }

  void stmt(const IfStmt& n) {
    if_chain(n);
    os_ << '\n';
  }

  void stmt(const ReturnStmt& n) {
    os_ << "return";
    if (n.value) os_ << ' ' << expr(*n.value);
    os_ << ";\n";
  }

  void stmt(const ExprStmt& n) { os_ << expr(*n.expr) << ";\n"; }

  std::ostringstream os_;
  int depth_ = 0;
};

// ----------------------------------------------------------------- s-exprs

class SexprPrinter {
 public:
  std::string print(const Program& p) {
    os_ << "(program";
    ++depth_;
    for (const auto& fn : p.functions) function(fn);
    --depth_;
    os_ << ")\n";
    return os_.str();
  }

 private:
  void open(std::string_view head) {
    os_ << '\n' << std::string(depth_ * 2, ' ') << '(' << head;
    ++depth_;
  }
  void close() {
    --depth_;
    os_ << ')';
  }

  void function(const Function& fn) {
    open("function " + fn.name);
    open("params");
    for (const auto& p : fn.params) os_ << " (" << to_string(p.type) << ' ' << p.name << ')';
    close();
    block(fn.body);
    close();
  }

  void block(const BlockStmt& b) {
    open("block");
    for (const auto& s : b.stmts) statement(*s);
    close();
  }

  void statement(const Stmt& s) {
    std::visit([&](const auto& n) { stmt(n); }, s.node);
  }

  void stmt(const BlockStmt& n) { block(n); }
  void stmt(const DeclStmt& n) {
    open("decl " + to_string(n.type) + " " + n.name);
    if (n.init) expr(*n.init);
    close();
  }
  void stmt(const AssignStmt& n) {
    open("assign");
    expr(*n.lvalue);
    expr(*n.value);
    close();
  }
  void stmt(const ReductionAssign& n) {
    open("reduce " + std::string(to_string(n.op)));
    expr(*n.lvalue);
    if (n.value) expr(*n.value);
    close();
  }
  void stmt(const MinMaxAssign& n) {
    open("minmax " + std::string(to_string(n.comparator)));
    open("targets");
    for (const auto& t : n.targets) expr(*t);
    close();
    expr(*n.current);
    expr(*n.candidate);
    if (!n.companions.empty()) {
      open("companions");
      for (const auto& c : n.companions) expr(*c);
      close();
    }
    close();
  }
  void stmt(const ForallStmt& n) {
    open(std::string(n.is_parallel ? "forall " : "for ") + n.iterator);
    expr(*n.range);
    if (n.filter) {
      open("filter");
      expr(*n.filter);
      close();
    }
    block(*n.body);
    close();
  }
  void stmt(const FixedPointStmt& n) {
    open("fixedPoint " + n.flag);
    expr(*n.convergence);
    block(*n.body);
    close();
  }
  void stmt(const IterateInBfsStmt& n) {
    open("iterateInBFS " + n.iterator);
    expr(*n.range);
    expr(*n.root);
    block(*n.body);
    if (n.reverse_body) {
      open("iterateInReverse");
      block(*n.reverse_body);
      close();
    }
    close();
  }
  void stmt(const IfStmt& n) {
    open("if");
    expr(*n.condition);
    block(*n.then_body);
    if (n.else_body) block(*n.else_body);
    close();
  }
  void stmt(const ReturnStmt& n) {
    open("return");
    if (n.value) expr(*n.value);
    close();
  }
  void stmt(const ExprStmt& n) {
    open("call-stmt");
    expr(*n.expr);
    close();
  }

  void expr(const Expr& e) {
    std::visit([&](const auto& n) { node(n); }, e.node);
  }
  void node(const Identifier& n) { os_ << " (id " << n.name << ')'; }
  void node(const Literal& n) { os_ << " (lit " << n.text << ')'; }
  void node(const MemberAccess& n) {
    os_ << " (. " << n.property;
    expr(*n.object);
    os_ << ')';
  }
  void node(const UnaryExpr& n) {
    os_ << " (" << to_string(n.op);
    expr(*n.operand);
    os_ << ')';
  }
  void node(const BinaryExpr& n) {
    os_ << " (" << to_string(n.op);
    expr(*n.lhs);
    expr(*n.rhs);
    os_ << ')';
  }
  void node(const ProcCallExpr& n) {
    os_ << " (call " << n.method;
    if (n.receiver) expr(*n.receiver);
    for (const auto& a : n.args) {
      if (a.name) {
        os_ << " (= " << *a.name;
        expr(*a.value);
        os_ << ')';
      } else {
        expr(*a.value);
      }
    }
    os_ << ')';
  }

  std::ostringstream os_;
  int depth_ = 0;
};

}  // namespace

std::string pretty_print(const ast::Program& program) { return ProgramPrinter{}.print(program); }

std::string pretty_print(const ast::Expr& expr) { return ExprPrinter{}.print(expr); }

std::string dump_sexpr(const ast::Program& program) { return SexprPrinter{}.print(program); }

}  // namespace starplat
