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

#include "starplat/parser.hpp"

#include <optional>

namespace starplat {
namespace {

using namespace ast;

constexpr int kLowestPrecedence = 1;
// Companion expressions inside `<...>` may not contain a bare comparison,
// otherwise the closing '>' would be ambiguous.
constexpr int kAboveComparison = 4;

std::optional<BinaryOp> binary_op(const Token& t) {
  if (t.kind != TokenKind::Operator) return std::nullopt;
  const std::string& s = t.text;
  if (s == "*") return BinaryOp::Mul;
  if (s == "/") return BinaryOp::Div;
  if (s == "+") return BinaryOp::Add;
  if (s == "-") return BinaryOp::Sub;
  if (s == "<") return BinaryOp::Lt;
  if (s == "<=") return BinaryOp::Le;
  if (s == ">") return BinaryOp::Gt;
  if (s == ">=") return BinaryOp::Ge;
  if (s == "==") return BinaryOp::Eq;
  if (s == "!=") return BinaryOp::Ne;
  if (s == "&&") return BinaryOp::And;
  if (s == "||") return BinaryOp::Or;
  return std::nullopt;
}

bool starts_type(const Token& t) {
  if (t.kind != TokenKind::Keyword) return false;
  static constexpr std::string_view kTypeWords[] = {
      "Graph", "node", "edge", "int", "bool", "long", "float", "double",
      "propNode", "propEdge", "SetN", "SetE", "List"};
  for (auto w : kTypeWords) {
    if (t.text == w) return true;
  }
  return false;
}

std::optional<Primitive> primitive_of(const Token& t) {
  if (t.kind != TokenKind::Keyword) return std::nullopt;
  if (t.text == "int") return Primitive::Int;
  if (t.text == "bool") return Primitive::Bool;
  if (t.text == "long") return Primitive::Long;
  if (t.text == "float") return Primitive::Float;
  if (t.text == "double") return Primitive::Double;
  return std::nullopt;
}

std::string describe(const Token& t) {
  if (t.kind == TokenKind::End) return "end of input";
  return "'" + t.text + "'";
}

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {
    if (toks_.empty() || toks_.back().kind != TokenKind::End) {
      throw ParseError({}, {"token stream terminated by end of input"}, "unterminated stream");
    }
  }

  Program program() {
    Program prog;
    while (peek().kind != TokenKind::End) {
      prog.functions.push_back(function());
    }
    prog.node_count = next_id_;
    return prog;
  }

 private:
  // ------------------------------------------------------------ token access
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  const Token& take() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    last_ = &t;
    return t;
  }
  SourcePos here() const { return peek().pos(); }
  SourcePos last_pos() const { return last_ ? last_->pos() : SourcePos{1, 1}; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    throw ParseError(Span{t.pos(), t.pos()}, std::move(expected), describe(t));
  }

  const Token& expect_punct(std::string_view p) {
    if (!peek().is_punct(p)) fail({"'" + std::string(p) + "'"});
    return take();
  }
  const Token& expect_op(std::string_view op) {
    if (!peek().is_op(op)) fail({"'" + std::string(op) + "'"});
    return take();
  }
  const Token& expect_keyword(std::string_view kw) {
    if (!peek().is_keyword(kw)) fail({"'" + std::string(kw) + "'"});
    return take();
  }
  const Token& expect_identifier() {
    if (peek().kind != TokenKind::Identifier) fail({"identifier"});
    return take();
  }

  // The closing '>' of a `<...>` list may have been lexed as part of '>='.
  void expect_close_angle_then_assign() {
    if (peek().is_op(">=")) {
      take();
      return;
    }
    expect_op(">");
    expect_op("=");
  }

  template <class Node>
  ExprPtr make_expr(SourcePos begin, Node node) {
    auto e = std::make_unique<Expr>();
    e->id = next_id_++;
    e->span = Span{begin, last_pos()};
    e->node = std::move(node);
    return e;
  }

  template <class Node>
  StmtPtr make_stmt(SourcePos begin, Node node) {
    auto s = std::make_unique<Stmt>();
    s->id = next_id_++;
    s->span = Span{begin, last_pos()};
    s->node = std::move(node);
    return s;
  }

  // ------------------------------------------------------------ declarations
  Function function() {
    SourcePos begin = here();
    expect_keyword("function");
    Function fn;
    fn.id = next_id_++;
    fn.name = expect_identifier().text;
    expect_punct("(");
    if (!peek().is_punct(")")) {
      do {
        SourcePos pbegin = here();
        if (!starts_type(peek())) fail({"parameter type"});
        FormalParam p;
        p.type = type();
        p.name = expect_identifier().text;
        p.span = Span{pbegin, last_pos()};
        fn.params.push_back(std::move(p));
      } while (peek().is_punct(",") && (take(), true));
    }
    expect_punct(")");
    auto body = block();
    fn.body = std::move(*body);
    fn.span = Span{begin, last_pos()};
    return fn;
  }

  DslType type() {
    const Token& t = peek();
    if (auto p = primitive_of(t)) {
      take();
      return DslType::prim_t(*p);
    }
    if (t.is_keyword("Graph")) return take(), DslType::graph_t();
    if (t.is_keyword("node")) return take(), DslType::node_t();
    if (t.is_keyword("edge")) return take(), DslType::edge_t();
    if (t.is_keyword("List")) return take(), DslType{DslType::Kind::List, Primitive::Int, {}};
    if (t.is_keyword("propNode") || t.is_keyword("propEdge")) {
      bool is_node = t.is_keyword("propNode");
      take();
      expect_op("<");
      auto elem = primitive_of(peek());
      if (!elem) fail({"primitive type"});
      take();
      DslType ty = is_node ? DslType::prop_node(*elem) : DslType::prop_edge(*elem);
      if (peek().is_punct(",")) {
        take();
        ty.graph = expect_identifier().text;
      }
      expect_op(">");
      return ty;
    }
    if (t.is_keyword("SetN") || t.is_keyword("SetE")) {
      DslType ty{t.is_keyword("SetN") ? DslType::Kind::SetN : DslType::Kind::SetE, Primitive::Int, {}};
      take();
      if (peek().is_op("<")) {
        take();
        ty.graph = expect_identifier().text;
        expect_op(">");
      }
      return ty;
    }
    fail({"type"});
  }

  // -------------------------------------------------------------- statements
  std::unique_ptr<BlockStmt> block() {
    expect_punct("{");
    auto b = std::make_unique<BlockStmt>();
    while (!peek().is_punct("}")) {
      if (peek().kind == TokenKind::End) fail({"'}'"});
      b->stmts.push_back(statement());
    }
    take();
    return b;
  }

  // A branch body: a block, or a single statement wrapped into one.
  std::unique_ptr<BlockStmt> branch_body() {
    if (peek().is_punct("{")) return block();
    auto b = std::make_unique<BlockStmt>();
    b->stmts.push_back(statement());
    return b;
  }

  StmtPtr statement() {
    const Token& t = peek();
    if (starts_type(t)) return declaration();
    if (t.is_keyword("forall") || t.is_keyword("for")) return forall();
    if (t.is_keyword("fixedPoint")) return fixed_point();
    if (t.is_keyword("iterateInBFS")) return bfs();
    if (t.is_keyword("if")) return if_stmt();
    if (t.is_keyword("return")) return return_stmt();
    if (t.is_op("<")) return min_max();
    if (t.kind == TokenKind::Identifier) return expression_statement();
    fail({"statement"});
  }

  StmtPtr declaration() {
    SourcePos begin = here();
    DeclStmt d;
    d.type = type();
    d.name = expect_identifier().text;
    if (peek().is_op("=")) {
      take();
      d.init = expression();
    }
    expect_punct(";");
    return make_stmt(begin, std::move(d));
  }

  StmtPtr expression_statement() {
    SourcePos begin = here();
    ExprPtr lhs = postfix();
    const Token& t = peek();
    if (t.is_op("=")) {
      take();
      AssignStmt a{std::move(lhs), expression()};
      expect_punct(";");
      return make_stmt(begin, std::move(a));
    }
    std::optional<ReduceOp> red;
    if (t.is_op("+=")) red = ReduceOp::Sum;
    if (t.is_op("*=")) red = ReduceOp::Product;
    if (t.is_op("&&=")) red = ReduceOp::All;
    if (t.is_op("||=")) red = ReduceOp::Any;
    if (red) {
      take();
      ReductionAssign r{std::move(lhs), *red, expression()};
      expect_punct(";");
      return make_stmt(begin, std::move(r));
    }
    if (t.is_op("++")) {
      take();
      ReductionAssign r{std::move(lhs), ReduceOp::Count, nullptr};
      expect_punct(";");
      return make_stmt(begin, std::move(r));
    }
    if (lhs->as<ProcCallExpr>() && t.is_punct(";")) {
      take();
      return make_stmt(begin, ExprStmt{std::move(lhs)});
    }
    fail({"'='", "'+='", "'*='", "'&&='", "'||='", "'++'", "';'"});
  }

  StmtPtr min_max() {
    SourcePos begin = here();
    expect_op("<");
    MinMaxAssign mm;
    mm.targets.push_back(postfix());
    while (peek().is_punct(",")) {
      take();
      mm.targets.push_back(postfix());
    }
    expect_close_angle_then_assign();
    expect_op("<");
    if (peek().is_keyword("Min")) {
      mm.comparator = Comparator::Min;
    } else if (peek().is_keyword("Max")) {
      mm.comparator = Comparator::Max;
    } else {
      fail({"'Min'", "'Max'"});
    }
    take();
    expect_punct("(");
    mm.current = expression();
    expect_punct(",");
    mm.candidate = expression();
    expect_punct(")");
    while (peek().is_punct(",")) {
      take();
      mm.companions.push_back(expression(kAboveComparison));
    }
    expect_op(">");
    expect_punct(";");
    return make_stmt(begin, std::move(mm));
  }

  StmtPtr forall() {
    SourcePos begin = here();
    ForallStmt f;
    f.is_parallel = take().text == "forall";
    expect_punct("(");
    const Token& it = expect_identifier();
    f.iterator = it.text;
    f.iterator_span = Span{it.pos(), it.pos()};
    expect_keyword("in");
    f.range = postfix();
    if (peek().is_punct(".") && peek(1).is_keyword("filter")) {
      take();
      take();
      expect_punct("(");
      f.filter = expression();
      expect_punct(")");
    }
    if (!peek().is_punct(")")) fail({"')'", "'.filter'"});
    take();
    f.body = block();
    return make_stmt(begin, std::move(f));
  }

  StmtPtr fixed_point() {
    SourcePos begin = here();
    expect_keyword("fixedPoint");
    expect_keyword("until");
    expect_punct("(");
    FixedPointStmt fp;
    const Token& flag = expect_identifier();
    fp.flag = flag.text;
    fp.flag_span = Span{flag.pos(), flag.pos()};
    expect_punct(":");
    fp.convergence = expression();
    expect_punct(")");
    fp.body = block();
    return make_stmt(begin, std::move(fp));
  }

  StmtPtr bfs() {
    SourcePos begin = here();
    expect_keyword("iterateInBFS");
    expect_punct("(");
    IterateInBfsStmt b;
    const Token& it = expect_identifier();
    b.iterator = it.text;
    b.iterator_span = Span{it.pos(), it.pos()};
    expect_keyword("in");
    b.range = postfix();
    expect_keyword("from");
    b.root = expression();
    expect_punct(")");
    b.body = block();
    if (peek().is_keyword("iterateInReverse")) {
      take();
      b.reverse_body = block();
    }
    return make_stmt(begin, std::move(b));
  }

  StmtPtr if_stmt() {
    SourcePos begin = here();
    expect_keyword("if");
    expect_punct("(");
    IfStmt s;
    s.condition = expression();
    expect_punct(")");
    s.then_body = branch_body();
    if (peek().is_keyword("else")) {
      take();
      if (peek().is_keyword("if")) {
        s.else_is_if = true;
        s.else_body = std::make_unique<BlockStmt>();
        s.else_body->stmts.push_back(if_stmt());
      } else {
        s.else_body = branch_body();
      }
    }
    return make_stmt(begin, std::move(s));
  }

  StmtPtr return_stmt() {
    SourcePos begin = here();
    expect_keyword("return");
    ReturnStmt r;
    if (!peek().is_punct(";")) r.value = expression();
    expect_punct(";");
    return make_stmt(begin, std::move(r));
  }

  // ------------------------------------------------------------- expressions
  ExprPtr expression(int min_prec = kLowestPrecedence) {
    SourcePos begin = here();
    ExprPtr lhs = unary();
    while (true) {
      auto op = binary_op(peek());
      if (!op || precedence(*op) < min_prec) return lhs;
      take();
      ExprPtr rhs = expression(precedence(*op) + 1);
      lhs = make_expr(begin, BinaryExpr{*op, std::move(lhs), std::move(rhs)});
    }
  }

  ExprPtr unary() {
    SourcePos begin = here();
    if (peek().is_op("!") || peek().is_op("-")) {
      UnaryOp op = take().text == "!" ? UnaryOp::Not : UnaryOp::Neg;
      ExprPtr operand = unary();
      return make_expr(begin, UnaryExpr{op, std::move(operand)});
    }
    return postfix();
  }

  std::vector<Argument> call_arguments() {
    expect_punct("(");
    std::vector<Argument> args;
    if (!peek().is_punct(")")) {
      do {
        Argument a;
        if (peek().kind == TokenKind::Identifier && peek(1).is_op("=")) {
          a.name = take().text;
          take();
        }
        a.value = expression();
        args.push_back(std::move(a));
      } while (peek().is_punct(",") && (take(), true));
    }
    expect_punct(")");
    return args;
  }

  ExprPtr postfix() {
    SourcePos begin = here();
    ExprPtr e = primary();
    // A '.' followed by a keyword (the `.filter` clause) belongs to the
    // enclosing construct, not to this expression.
    while (peek().is_punct(".") && peek(1).kind == TokenKind::Identifier) {
      take();
      std::string name = take().text;
      if (peek().is_punct("(")) {
        auto args = call_arguments();
        e = make_expr(begin, ProcCallExpr{std::move(e), std::move(name), std::move(args)});
      } else {
        e = make_expr(begin, MemberAccess{std::move(e), std::move(name)});
      }
    }
    return e;
  }

  ExprPtr primary() {
    SourcePos begin = here();
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Identifier: {
        std::string name = take().text;
        if (peek().is_punct("(")) {
          auto args = call_arguments();
          return make_expr(begin, ProcCallExpr{nullptr, std::move(name), std::move(args)});
        }
        return make_expr(begin, Identifier{std::move(name)});
      }
      case TokenKind::IntLiteral:
        return make_expr(begin, Literal{Literal::Kind::Int, take().text});
      case TokenKind::FloatLiteral:
        return make_expr(begin, Literal{Literal::Kind::Float, take().text});
      case TokenKind::Keyword:
        if (t.text == "True" || t.text == "False") {
          return make_expr(begin, Literal{Literal::Kind::Bool, take().text});
        }
        if (t.text == "INT_MAX") return make_expr(begin, Literal{Literal::Kind::IntMax, take().text});
        break;
      case TokenKind::Punctuation:
        if (t.text == "(") {
          take();
          ExprPtr inner = expression();
          expect_punct(")");
          // Parentheses only group; the span widens to cover them.
          inner->span = Span{begin, last_pos()};
          return inner;
        }
        break;
      default:
        break;
    }
    fail({"expression"});
  }

  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
  const Token* last_ = nullptr;
  int next_id_ = 0;
};

}  // namespace

ast::Program parse(const std::vector<Token>& tokens) { return Parser(tokens).program(); }

ast::Program parse_source(std::string_view source) { return parse(tokenize(source)); }

}  // namespace starplat
