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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "starplat/ast.hpp"
#include "starplat/types.hpp"

namespace starplat {

/// A runtime value. Numeric kinds mirror the DSL primitives; `int` is 32-bit
/// and `float` is single precision (stored widened, rounded after each op).
struct Value {
  enum class Kind { None, Bool, Int, Long, Float, Double, Node, Edge };

  Kind kind = Kind::None;
  std::int64_t i = 0;  // Bool, Int, Long, Node, Edge
  double d = 0.0;      // Float, Double

  static Value of_bool(bool b) { return {Kind::Bool, b ? 1 : 0, 0.0}; }
  static Value of_int(std::int64_t v) { return {Kind::Int, v, 0.0}; }
  static Value of_long(std::int64_t v) { return {Kind::Long, v, 0.0}; }
  static Value of_float(double v) { return {Kind::Float, 0, static_cast<float>(v)}; }
  static Value of_double(double v) { return {Kind::Double, 0, v}; }
  static Value of_node(int v) { return {Kind::Node, v, 0.0}; }
  static Value of_edge(int e) { return {Kind::Edge, e, 0.0}; }

  bool is_real() const { return kind == Kind::Float || kind == Kind::Double; }
  bool truthy() const { return i != 0; }
  double as_double() const { return is_real() ? d : static_cast<double>(i); }

  friend bool operator==(const Value& a, const Value& b) {
    return a.kind == b.kind && a.i == b.i && (a.d == b.d || (a.d != a.d && b.d != b.d));
  }
};

Value::Kind kind_of(Primitive p);
/// Primitive matching a numeric or bool value (Int for node and edge ids).
Primitive primitive_of(const Value& v);
/// Zero of primitive `p` (False for bool).
Value zero_of(Primitive p);

/// Converts a numeric or bool value to `p` the way a C assignment would,
/// except that an out-of-range integer conversion throws RuntimeError.
Value convert(const Value& v, Primitive p);

/// Arithmetic and comparison in the promoted type `result`. Integer overflow
/// throws RuntimeError, except that `int` addition or subtraction involving
/// the INT_MAX sentinel saturates at INT_MAX instead of overflowing.
Value arith(ast::BinaryOp op, const Value& a, const Value& b, Primitive result);
bool compare(ast::BinaryOp op, const Value& a, const Value& b);
Value negate(const Value& v);

/// DSL-facing text of a value: True/False, integers in decimal, double with
/// %.17g and float with %.9g.
std::string format_value(const Value& v);

/// Parses `text` as a value of type `t` (node ids for node parameters).
/// Throws ArgError on malformed input.
Value parse_value(std::string_view text, const DslType& t);

struct PropertyDump {
  std::string name;
  Primitive prim = Primitive::Int;
  std::vector<Value> values;
};

struct FixedPointStats {
  ast::NodeId stmt = -1;
  long long iterations = 0;
};

/// Final state of a run: properties and scalars declared at the top level
/// of the function (plus its non-Graph parameters) in declaration order.
struct RunResult {
  std::string function;
  std::vector<PropertyDump> node_props;
  std::vector<PropertyDump> edge_props;
  std::vector<std::pair<std::string, Value>> scalars;
  std::optional<Value> return_value;
  std::vector<FixedPointStats> fixed_points;
  double wall_seconds = 0.0;

  const PropertyDump* node_prop(std::string_view name) const;
  const Value* scalar(std::string_view name) const;
};

/// Text form shared by the interpreter, the simulator and emitted programs:
///   #node <name>      then `id<TAB>value` per vertex
///   #edge <name>      then `edge-index<TAB>value` per edge slot
///   #scalars          then `name<TAB>value`
///   #return<TAB>value (only when the function returns a value)
std::string to_tsv(const RunResult& r);

/// Compares two TSV dumps line by line. Integer and bool fields must match
/// exactly; fields containing a fraction or exponent match within `tol`
/// (absolute). Returns a description of the first difference, if any.
std::optional<std::string> compare_tsv(std::string_view a, std::string_view b, double tol);

inline std::optional<std::string> compare_results(const RunResult& a, const RunResult& b, double tol) {
  return compare_tsv(to_tsv(a), to_tsv(b), tol);
}

}  // namespace starplat
