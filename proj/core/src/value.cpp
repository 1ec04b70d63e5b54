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

#include "starplat/value.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace starplat {

using ast::BinaryOp;

namespace {

constexpr std::int64_t kIntMax = std::numeric_limits<std::int32_t>::max();
constexpr std::int64_t kIntMin = std::numeric_limits<std::int32_t>::min();

[[noreturn]] void overflow(std::string_view what) {
  throw RuntimeError(std::string(what) + " overflows");
}

std::int64_t fit_int(std::int64_t v, std::string_view what) {
  if (v < kIntMin || v > kIntMax) overflow(what);
  return v;
}

}  // namespace

Value::Kind kind_of(Primitive p) {
  switch (p) {
    case Primitive::Bool: return Value::Kind::Bool;
    case Primitive::Int: return Value::Kind::Int;
    case Primitive::Long: return Value::Kind::Long;
    case Primitive::Float: return Value::Kind::Float;
    case Primitive::Double: return Value::Kind::Double;
  }
  return Value::Kind::None;
}

Primitive primitive_of(const Value& v) {
  switch (v.kind) {
    case Value::Kind::Bool: return Primitive::Bool;
    case Value::Kind::Long: return Primitive::Long;
    case Value::Kind::Float: return Primitive::Float;
    case Value::Kind::Double: return Primitive::Double;
    default: return Primitive::Int;
  }
}

Value zero_of(Primitive p) {
  Value v;
  v.kind = kind_of(p);
  return v;
}

Value convert(const Value& v, Primitive p) {
  if (v.kind == kind_of(p)) return v;
  switch (p) {
    case Primitive::Bool: return Value::of_bool(v.is_real() ? v.d != 0.0 : v.i != 0);
    case Primitive::Float: return Value::of_float(v.as_double());
    case Primitive::Double: return Value::of_double(v.as_double());
    case Primitive::Int:
    case Primitive::Long: {
      std::int64_t out = v.i;
      if (v.is_real()) {
        double t = std::trunc(v.d);
        if (!(t >= -9.2233720368547758e18 && t < 9.2233720368547758e18))
          throw RuntimeError("value " + format_value(v) + " does not fit in " + to_string(p));
        out = static_cast<std::int64_t>(t);
      }
      if (p == Primitive::Int) {
        if (out < kIntMin || out > kIntMax)
          throw RuntimeError("value " + format_value(v) + " does not fit in int");
        return Value::of_int(out);
      }
      return Value::of_long(out);
    }
  }
  return v;
}

Value arith(BinaryOp op, const Value& a, const Value& b, Primitive result) {
  const Value x = convert(a, result);
  const Value y = convert(b, result);
  if (result == Primitive::Float || result == Primitive::Double) {
    double r = 0;
    switch (op) {
      case BinaryOp::Add: r = x.d + y.d; break;
      case BinaryOp::Sub: r = x.d - y.d; break;
      case BinaryOp::Mul: r = x.d * y.d; break;
      case BinaryOp::Div: r = x.d / y.d; break;
      default: throw RuntimeError("not an arithmetic operator");
    }
    return result == Primitive::Float ? Value::of_float(r) : Value::of_double(r);
  }
  const bool is_int = result == Primitive::Int;
  const std::string_view what = is_int ? "int arithmetic" : "long arithmetic";
  std::int64_t r = 0;
  switch (op) {
    case BinaryOp::Add:
    case BinaryOp::Sub: {
      const std::int64_t rhs = op == BinaryOp::Add ? y.i : -y.i;
      if (is_int) {
        r = x.i + rhs;
        if ((r > kIntMax || r < kIntMin) && (x.i == kIntMax || y.i == kIntMax)) return Value::of_int(kIntMax);
        return Value::of_int(fit_int(r, what));
      }
      if (op == BinaryOp::Add ? __builtin_add_overflow(x.i, y.i, &r) : __builtin_sub_overflow(x.i, y.i, &r))
        overflow(what);
      return Value::of_long(r);
    }
    case BinaryOp::Mul:
      if (__builtin_mul_overflow(x.i, y.i, &r)) overflow(what);
      return is_int ? Value::of_int(fit_int(r, what)) : Value::of_long(r);
    case BinaryOp::Div:
      if (y.i == 0) throw RuntimeError("integer division by zero");
      if (x.i == std::numeric_limits<std::int64_t>::min() && y.i == -1) overflow(what);
      r = x.i / y.i;
      return is_int ? Value::of_int(fit_int(r, what)) : Value::of_long(r);
    default: throw RuntimeError("not an arithmetic operator");
  }
}

bool compare(BinaryOp op, const Value& a, const Value& b) {
  if (a.is_real() || b.is_real()) {
    const double x = a.as_double();
    const double y = b.as_double();
    switch (op) {
      case BinaryOp::Lt: return x < y;
      case BinaryOp::Le: return x <= y;
      case BinaryOp::Gt: return x > y;
      case BinaryOp::Ge: return x >= y;
      case BinaryOp::Eq: return x == y;
      case BinaryOp::Ne: return x != y;
      default: break;
    }
  } else {
    const std::int64_t x = a.i;
    const std::int64_t y = b.i;
    switch (op) {
      case BinaryOp::Lt: return x < y;
      case BinaryOp::Le: return x <= y;
      case BinaryOp::Gt: return x > y;
      case BinaryOp::Ge: return x >= y;
      case BinaryOp::Eq: return x == y;
      case BinaryOp::Ne: return x != y;
      default: break;
    }
  }
  throw RuntimeError("not a comparison operator");
}

Value negate(const Value& v) {
  switch (v.kind) {
    case Value::Kind::Float: return Value::of_float(-v.d);
    case Value::Kind::Double: return Value::of_double(-v.d);
    case Value::Kind::Int: return Value::of_int(fit_int(-v.i, "int negation"));
    case Value::Kind::Long:
      if (v.i == std::numeric_limits<std::int64_t>::min()) overflow("long negation");
      return Value::of_long(-v.i);
    default: throw RuntimeError("cannot negate a non-numeric value");
  }
}

std::string format_value(const Value& v) {
  char buf[64];
  switch (v.kind) {
    case Value::Kind::Bool: return v.i ? "True" : "False";
    case Value::Kind::Float:
      std::snprintf(buf, sizeof buf, "%.9g", v.d);
      return buf;
    case Value::Kind::Double:
      std::snprintf(buf, sizeof buf, "%.17g", v.d);
      return buf;
    case Value::Kind::None: return "";
    default: return std::to_string(v.i);
  }
}

Value parse_value(std::string_view text, const DslType& t) {
  auto bad = [&]() -> ArgError {
    return ArgError("'" + std::string(text) + "' is not a valid " + to_string(t));
  };
  if (t.is(DslType::Kind::Node)) {
    long long id = 0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), id);
    if (ec != std::errc() || p != text.data() + text.size() || id < 0 || id > kIntMax) throw bad();
    return Value::of_node(static_cast<int>(id));
  }
  if (!t.is(DslType::Kind::Primitive)) throw bad();
  switch (t.prim) {
    case Primitive::Bool:
      if (text == "True" || text == "true" || text == "1") return Value::of_bool(true);
      if (text == "False" || text == "false" || text == "0") return Value::of_bool(false);
      throw bad();
    case Primitive::Int:
    case Primitive::Long: {
      long long v = 0;
      auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
      if (ec != std::errc() || p != text.data() + text.size()) throw bad();
      if (t.prim == Primitive::Int && (v < kIntMin || v > kIntMax)) throw bad();
      return t.prim == Primitive::Int ? Value::of_int(v) : Value::of_long(v);
    }
    case Primitive::Float:
    case Primitive::Double: {
      std::string s(text);
      char* end = nullptr;
      double v = std::strtod(s.c_str(), &end);
      if (s.empty() || end != s.c_str() + s.size()) throw bad();
      return t.prim == Primitive::Float ? Value::of_float(v) : Value::of_double(v);
    }
  }
  throw bad();
}

const PropertyDump* RunResult::node_prop(std::string_view name) const {
  for (const auto& p : node_props)
    if (p.name == name) return &p;
  return nullptr;
}

const Value* RunResult::scalar(std::string_view name) const {
  for (const auto& [n, v] : scalars)
    if (n == name) return &v;
  return nullptr;
}

std::string to_tsv(const RunResult& r) {
  std::string out;
  auto props = [&](const std::vector<PropertyDump>& list, std::string_view tag) {
    for (const auto& p : list) {
      out += '#';
      out += tag;
      out += ' ' + p.name + '\n';
      for (std::size_t i = 0; i < p.values.size(); ++i)
        out += std::to_string(i) + '\t' + format_value(p.values[i]) + '\n';
    }
  };
  props(r.node_props, "node");
  props(r.edge_props, "edge");
  out += "#scalars\n";
  for (const auto& [name, v] : r.scalars) out += name + '\t' + format_value(v) + '\n';
  if (r.return_value) out += "#return\t" + format_value(*r.return_value) + '\n';
  return out;
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t end = s.find(sep, pos);
    if (end == std::string_view::npos) end = s.size();
    out.push_back(s.substr(pos, end - pos));
    pos = end + 1;
  }
  return out;
}

bool looks_real(std::string_view f) {
  return f.find_first_of(".eEni") != std::string_view::npos &&
         f != "True" && f != "False";
}

}  // namespace

std::optional<std::string> compare_tsv(std::string_view a, std::string_view b, double tol) {
  auto la = split(a, '\n');
  auto lb = split(b, '\n');
  while (!la.empty() && la.back().empty()) la.pop_back();
  while (!lb.empty() && lb.back().empty()) lb.pop_back();
  std::string_view section;
  for (std::size_t i = 0; i < std::max(la.size(), lb.size()); ++i) {
    if (i >= la.size() || i >= lb.size())
      return "line " + std::to_string(i + 1) + ": one dump ends early";
    if (!la[i].empty() && la[i][0] == '#') section = la[i];
    auto fa = split(la[i], '\t');
    auto fb = split(lb[i], '\t');
    auto where = [&]() { return "line " + std::to_string(i + 1) + " (" + std::string(section) + ")"; };
    if (fa.size() != fb.size()) return where() + ": '" + std::string(la[i]) + "' vs '" + std::string(lb[i]) + "'";
    for (std::size_t f = 0; f < fa.size(); ++f) {
      if (fa[f] == fb[f]) continue;
      if (looks_real(fa[f]) || looks_real(fb[f])) {
        char* ea = nullptr;
        char* eb = nullptr;
        std::string sa(fa[f]);
        std::string sb(fb[f]);
        double x = std::strtod(sa.c_str(), &ea);
        double y = std::strtod(sb.c_str(), &eb);
        const bool parsed = ea == sa.c_str() + sa.size() && eb == sb.c_str() + sb.size();
        if (parsed && (x == y || std::fabs(x - y) <= tol)) continue;
      }
      return where() + ": '" + std::string(la[i]) + "' vs '" + std::string(lb[i]) + "'";
    }
  }
  return std::nullopt;
}

}  // namespace starplat
