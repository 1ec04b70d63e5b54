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

#include "starplat/ast.hpp"

#include <sstream>

namespace starplat {

std::string format_diagnostic(const std::string& file, const Diagnostic& d) {
  std::ostringstream os;
  os << file << ':';
  if (d.pos) os << d.pos->line << ':' << d.pos->col << ':';
  switch (d.severity) {
    case Severity::Error: os << " error: "; break;
    case Severity::Warning: os << " warning: "; break;
    case Severity::Note: os << " note: "; break;
  }
  os << d.message;
  return os.str();
}

namespace {
std::string describe_parse_error(const std::vector<std::string>& expected, const std::string& found) {
  std::string msg = "expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
    msg += expected[i];
  }
  msg += " but found " + found;
  return msg;
}
}  // namespace

ParseError::ParseError(Span span, std::vector<std::string> expected, std::string found)
    : Error("ParseError", describe_parse_error(expected, found), span.begin),
      span_(span),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

std::string to_string(Primitive p) {
  switch (p) {
    case Primitive::Int: return "int";
    case Primitive::Bool: return "bool";
    case Primitive::Long: return "long";
    case Primitive::Float: return "float";
    case Primitive::Double: return "double";
  }
  return "?";
}

std::string to_string(const DslType& t) {
  using K = DslType::Kind;
  const std::string binding = t.graph.empty() ? "" : ", " + t.graph;
  switch (t.kind) {
    case K::Graph: return "Graph";
    case K::Node: return "node";
    case K::Edge: return "edge";
    case K::PropNode:
      return "propNode<" + to_string(t.prim) + binding + ">";
    case K::PropEdge:
      return "propEdge<" + to_string(t.prim) + binding + ">";
    case K::Primitive: return to_string(t.prim);
    case K::SetN: return t.graph.empty() ? "SetN" : "SetN<" + t.graph + ">";
    case K::SetE: return t.graph.empty() ? "SetE" : "SetE<" + t.graph + ">";
    case K::List: return "List";
    case K::Void: return "void";
    case K::NodeSeq: return "node sequence";
  }
  return "?";
}

int rank_of(Primitive p) {
  switch (p) {
    case Primitive::Bool: return 0;
    case Primitive::Int: return 1;
    case Primitive::Long: return 2;
    case Primitive::Float: return 3;
    case Primitive::Double: return 4;
  }
  return 0;
}

Primitive promote(Primitive a, Primitive b) {
  Primitive wider = rank_of(a) >= rank_of(b) ? a : b;
  return wider == Primitive::Bool ? Primitive::Int : wider;
}

namespace ast {

std::string_view to_string(BinaryOp op) {
  switch (op) {
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Lt: return "<";
    case BinaryOp::Le: return "<=";
    case BinaryOp::Gt: return ">";
    case BinaryOp::Ge: return ">=";
    case BinaryOp::Eq: return "==";
    case BinaryOp::Ne: return "!=";
    case BinaryOp::And: return "&&";
    case BinaryOp::Or: return "||";
  }
  return "?";
}

std::string_view to_string(UnaryOp op) { return op == UnaryOp::Not ? "!" : "-"; }

std::string_view to_string(ReduceOp op) {
  switch (op) {
    case ReduceOp::Sum: return "+=";
    case ReduceOp::Product: return "*=";
    case ReduceOp::Count: return "++";
    case ReduceOp::All: return "&&=";
    case ReduceOp::Any: return "||=";
  }
  return "?";
}

std::string_view to_string(Comparator c) { return c == Comparator::Min ? "Min" : "Max"; }

int precedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::Or: return 1;
    case BinaryOp::And: return 2;
    case BinaryOp::Lt:
    case BinaryOp::Le:
    case BinaryOp::Gt:
    case BinaryOp::Ge:
    case BinaryOp::Eq:
    case BinaryOp::Ne: return 3;
    case BinaryOp::Add:
    case BinaryOp::Sub: return 4;
    case BinaryOp::Mul:
    case BinaryOp::Div: return 5;
  }
  return 0;
}

}  // namespace ast
}  // namespace starplat
