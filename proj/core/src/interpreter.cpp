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

#include "starplat/interpreter.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <deque>
#include <limits>

#include "machine.hpp"

namespace starplat {

using namespace ast;

long long default_iteration_cap(const CsrGraph& g) { return 2LL * g.n + 16; }

namespace detail {

namespace {

Value to_type(const Value& v, const DslType& t) {
  return t.is(DslType::Kind::Primitive) ? convert(v, t.prim) : v;
}

}  // namespace

Machine::Machine(const TypedProgram& tp, const CsrGraph& g, const RunOptions& options)
    : tp_(tp), g_(g), options_(options) {
  cap_ = options.max_iterations.value_or(default_iteration_cap(g));
  scalars_.resize(tp.symbols.size());
  props_.resize(tp.symbols.size());
  if (!options.function.empty()) {
    function_ = tp.function_index(options.function);
    if (function_ < 0) throw ArgError("no function named '" + options.function + "'");
  } else if (tp.program.functions.empty()) {
    throw ArgError("program defines no function");
  }
}

RunResult Machine::run(const ArgMap& args) {
  const auto start = std::chrono::steady_clock::now();
  const Function& fn = tp_.program.functions[function_];
  const FunctionInfo& fi = tp_.functions[function_];

  for (const auto& [name, value] : args) {
    bool known = false;
    for (int p : fi.params) known = known || tp_.symbols[p].name == name;
    if (!known) throw ArgError("function '" + fn.name + "' has no parameter '" + name + "'");
  }
  for (int p : fi.params) {
    const Symbol& sym = tp_.symbols[p];
    if (sym.type.is(DslType::Kind::Graph)) continue;
    auto it = args.find(sym.name);
    if (it == args.end()) throw RuntimeError("missing argument '" + sym.name + "'");
    if (sym.type.is(DslType::Kind::SetN)) {
      std::vector<int> members;
      std::string_view rest = it->second;
      while (!rest.empty()) {
        auto comma = rest.find(',');
        auto item = rest.substr(0, comma);
        Value v = parse_value(item, DslType::node_t());
        if (v.i >= g_.n)
          throw RuntimeError("node " + std::to_string(v.i) + " in '" + sym.name + "' is out of range");
        members.push_back(static_cast<int>(v.i));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
      }
      sets_[p] = std::move(members);
      continue;
    }
    if (!sym.type.is(DslType::Kind::Node) && !sym.type.is(DslType::Kind::Primitive))
      throw ArgError("parameter '" + sym.name + "' of type " + to_string(sym.type) +
                     " cannot be passed a value");
    Value v = parse_value(it->second, sym.type);
    if (sym.type.is(DslType::Kind::Node) && v.i >= g_.n)
      throw RuntimeError("argument " + sym.name + "=" + it->second + " is not a vertex of the graph");
    scalars_[p] = v;
  }

  exec_block(fn.body);

  RunResult out;
  out.function = fn.name;
  for (int idx : fi.top_level) {
    const Symbol& sym = tp_.symbols[idx];
    switch (sym.type.kind) {
      case DslType::Kind::PropNode:
        out.node_props.push_back({sym.name, sym.type.prim, props_[idx]});
        break;
      case DslType::Kind::PropEdge:
        out.edge_props.push_back({sym.name, sym.type.prim, props_[idx]});
        break;
      case DslType::Kind::Primitive:
      case DslType::Kind::Node:
      case DslType::Kind::Edge:
        out.scalars.emplace_back(sym.name, scalars_[idx]);
        break;
      default: break;
    }
  }
  out.return_value = return_value_;
  for (const auto& [stmt, n] : iterations_) out.fixed_points.push_back({stmt, n});
  out.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

// ------------------------------------------------------------ statements

void Machine::exec_block(const BlockStmt& b) {
  for (const auto& s : b.stmts) {
    exec(*s);
    if (returned_) return;
  }
}

void Machine::exec(const Stmt& s) {
  const StmtInfo& info = tp_.info(s);
  if (auto* n = s.as<BlockStmt>()) {
    exec_block(*n);
  } else if (auto* n = s.as<DeclStmt>()) {
    const int sym = info.decl;
    if (n->type.is(DslType::Kind::PropNode)) {
      props_[sym].assign(g_.n, zero_of(n->type.prim));
    } else if (n->type.is(DslType::Kind::PropEdge)) {
      props_[sym].assign(g_.m, zero_of(n->type.prim));
    } else if (n->type.is(DslType::Kind::SetN)) {
      sets_[sym].clear();
    } else if (n->init) {
      scalars_[sym] = to_type(eval(*n->init), n->type);
    } else {
      scalars_[sym] = n->type.is(DslType::Kind::Primitive) ? zero_of(n->type.prim) : Value{};
    }
  } else if (auto* n = s.as<AssignStmt>()) {
    if (info.whole_copy) {
      props_[tp_.info(*n->lvalue).symbol] = props_[tp_.info(*n->value).symbol];
      return;
    }
    Place p = place(*n->lvalue);
    store(s, p, eval(*n->value));
  } else if (auto* n = s.as<ReductionAssign>()) {
    Place p = place(*n->lvalue);
    Value v = n->value ? eval(*n->value) : Value::of_int(1);
    if (p.property) {
      reduce_prop(s, p, n->op, v);
    } else if (in_region() && is_shared_scalar(p.symbol)) {
      reduce_scalar(p.symbol, n->op, v);
    } else {
      scalars_[p.symbol] = reduce_value(n->op, scalars_[p.symbol], v, p.prim);
    }
  } else if (auto* n = s.as<MinMaxAssign>()) {
    std::vector<Place> targets;
    for (const auto& t : n->targets) targets.push_back(place(*t));
    Value cand = eval(*n->candidate);
    std::vector<Value> comps;
    for (const auto& c : n->companions) comps.push_back(eval(*c));
    minmax(s, n->comparator, targets, cand, comps);
  } else if (auto* n = s.as<ForallStmt>()) {
    if (info.parallel) {
      run_forall_region(s, *n);
      return;
    }
    for (const auto& item : range_items(*n)) {
      run_item(*n, info.iterator, item);
      if (returned_) return;
    }
  } else if (auto* n = s.as<FixedPointStmt>()) {
    run_fixed_point(s, *n);
  } else if (auto* n = s.as<IterateInBfsStmt>()) {
    run_bfs(s, *n);
  } else if (auto* n = s.as<IfStmt>()) {
    if (eval(*n->condition).truthy()) {
      exec_block(*n->then_body);
    } else if (n->else_body) {
      exec_block(*n->else_body);
    }
  } else if (auto* n = s.as<ReturnStmt>()) {
    if (n->value) return_value_ = eval(*n->value);
    returned_ = true;
  } else if (auto* n = s.as<ExprStmt>()) {
    const ExprInfo& ei = tp_.info(*n->expr);
    if (ei.method == GraphMethod::AttachNodeProperty || ei.method == GraphMethod::AttachEdgeProperty) {
      const auto& call = *n->expr->as<ProcCallExpr>();
      for (std::size_t i = 0; i < ei.attach_symbols.size(); ++i) {
        const int sym = ei.attach_symbols[i];
        const Value v = convert(eval(*call.args[i].value), tp_.symbols[sym].type.prim);
        props_[sym].assign(ei.method == GraphMethod::AttachNodeProperty ? g_.n : g_.m, v);
      }
    } else {
      eval(*n->expr);
    }
  }
}

// ----------------------------------------------------------------- ranges

std::vector<RangeItem> Machine::range_items(const ForallStmt& f) {
  std::vector<RangeItem> items;
  if (f.range->as<Identifier>()) {
    for (int v : sets_[tp_.info(*f.range).symbol]) items.push_back({v, -1, -1, GraphMethod::None});
    return items;
  }
  const auto& call = *f.range->as<ProcCallExpr>();
  const GraphMethod method = tp_.info(*f.range).method;
  if (method == GraphMethod::Nodes) {
    items.reserve(g_.n);
    for (int v = 0; v < g_.n; ++v) items.push_back({v, -1, -1, method});
    return items;
  }
  const Value src = eval(*call.args[0].value);
  if (src.kind != Value::Kind::Node || src.i < 0 || src.i >= g_.n)
    throw RuntimeError("vertex " + format_value(src) + " is out of range", f.range->span.begin);
  const int v = static_cast<int>(src.i);
  if (method == GraphMethod::NodesTo) {
    for (int slot = g_.rev_offsets[v]; slot < g_.rev_offsets[v + 1]; ++slot) {
      const int u = g_.rev_adj[slot];
      if (bfs_ && bfs_->level[u] != bfs_->level[v] - 1) continue;
      if (bfs_ && bfs_->level[v] < 0) continue;
      items.push_back({u, g_.rev_eid[slot], v, method});
    }
  } else {
    for (int e = g_.offsets[v]; e < g_.offsets[v + 1]; ++e) {
      const int w = g_.adj[e];
      if (bfs_ && (bfs_->level[v] < 0 || bfs_->level[w] != bfs_->level[v] + 1)) continue;
      items.push_back({w, e, v, method});
    }
  }
  return items;
}

void Machine::run_item(const ForallStmt& f, int iterator, const RangeItem& item) {
  scalars_[iterator] = Value::of_node(item.vertex);
  loops_.push_back({iterator, item.source, item.method, item.edge});
  if (!f.filter || eval(*f.filter).truthy()) exec_block(*f.body);
  loops_.pop_back();
}

void Machine::run_bfs_body(const BlockStmt& body, int iterator, int v) {
  scalars_[iterator] = Value::of_node(v);
  exec_block(body);
}

Machine::BfsState Machine::bfs_levels(int root) const {
  BfsState st;
  st.level.assign(g_.n, -1);
  st.level[root] = 0;
  st.levels.push_back({root});
  while (true) {
    std::vector<int> next;
    for (int u : st.levels.back()) {
      for (int w : g_.out_neighbors(u)) {
        if (st.level[w] >= 0) continue;
        st.level[w] = st.level[u] + 1;
        next.push_back(w);
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    st.levels.push_back(std::move(next));
  }
  return st;
}

// ---------------------------------------------------------------- regions

void Machine::run_forall_region(const Stmt& s, const ForallStmt& f) {
  const int it = tp_.info(s).iterator;
  region_ = s.id;
  for (const auto& item : range_items(f)) run_item(f, it, item);
  region_ = -1;
}

void Machine::run_bfs(const Stmt& s, const IterateInBfsStmt& b) {
  const Value root = eval(*b.root);
  if (root.kind != Value::Kind::Node || root.i < 0 || root.i >= g_.n)
    throw RuntimeError("BFS root is not a vertex", b.root->span.begin);
  const BfsState st = bfs_levels(static_cast<int>(root.i));
  const BfsState* saved = bfs_;
  bfs_ = &st;
  region_ = s.id;
  const int it = tp_.info(s).iterator;
  for (const auto& level : st.levels)
    for (int v : level) run_bfs_body(*b.body, it, v);
  if (b.reverse_body) {
    const NodeId rev = tp_.reverse_region(s.id);
    region_ = rev;
    const int rit = tp_.regions.at(rev).iterator;
    for (auto level = st.levels.rbegin(); level != st.levels.rend(); ++level)
      for (int v : *level) run_bfs_body(*b.reverse_body, rit, v);
  }
  region_ = -1;
  bfs_ = saved;
}

void Machine::run_fixed_point(const Stmt& s, const FixedPointStmt& fp) {
  const int flag = tp_.fixed_points.at(s.id).flag;
  long long iterations = 0;
  while (!scalars_[flag].truthy()) {
    count_iteration(s, iterations);
    exec_block(*fp.body);
    if (returned_) break;
    scalars_[flag] = Value::of_bool(eval(*fp.convergence).truthy());
  }
  record_iterations(s.id, iterations);
}

void Machine::count_iteration(const Stmt& s, long long& iterations) {
  if (++iterations > cap_)
    throw RuntimeError("fixedPoint on '" + s.as<FixedPointStmt>()->flag +
                           "' did not converge within " + std::to_string(cap_) + " iterations",
                       s.span.begin);
}

void Machine::record_iterations(NodeId stmt, long long iterations) { iterations_[stmt] += iterations; }

// ----------------------------------------------------------------- memory

bool Machine::is_shared_scalar(int symbol) const {
  const Symbol& s = tp_.symbols[symbol];
  return s.storage != StorageClass::Property && s.region < 0;
}

Place Machine::place(const Expr& lvalue) {
  const ExprInfo& info = tp_.info(lvalue);
  Place p;
  p.symbol = info.symbol;
  const DslType& t = tp_.symbols[p.symbol].type;
  p.prim = t.prim;
  if (auto* m = lvalue.as<MemberAccess>()) {
    const Value obj = eval(*m->object);
    p.property = true;
    p.edge = obj.kind == Value::Kind::Edge;
    const int limit = p.edge ? g_.m : g_.n;
    if (obj.i < 0 || obj.i >= limit)
      throw RuntimeError("'" + std::string(m->property) + "' accessed on an invalid " +
                             (p.edge ? "edge" : "node"),
                         lvalue.span.begin);
    p.index = static_cast<int>(obj.i);
  }
  return p;
}

Value Machine::load(const Place& p) {
  if (p.property) return load_prop(p.symbol, p.index, p.edge);
  if (in_region() && is_shared_scalar(p.symbol)) return load_scalar(p.symbol);
  return scalars_[p.symbol];
}

void Machine::store(const Stmt& s, const Place& p, const Value& v) {
  if (p.property) {
    store_prop(s, p.symbol, p.index, p.edge, convert(v, p.prim));
    return;
  }
  scalars_[p.symbol] = to_type(v, tp_.symbols[p.symbol].type);
}

bool Machine::beats(Comparator c, const Value& cand, const Value& cur) const {
  return compare(c == Comparator::Min ? BinaryOp::Lt : BinaryOp::Gt, cand, cur);
}

Value Machine::reduce_value(ReduceOp op, const Value& cur, const Value& v, Primitive prim) const {
  switch (op) {
    case ReduceOp::Sum:
    case ReduceOp::Count:
      return convert(arith(BinaryOp::Add, cur, v, promote(prim, primitive_of(v))), prim);
    case ReduceOp::Product:
      return convert(arith(BinaryOp::Mul, cur, v, promote(prim, primitive_of(v))), prim);
    case ReduceOp::All: return Value::of_bool(cur.truthy() && v.truthy());
    case ReduceOp::Any: return Value::of_bool(cur.truthy() || v.truthy());
  }
  return cur;
}

bool Machine::any_true(int property) const {
  for (const auto& v : props_[property])
    if (v.truthy()) return true;
  return false;
}

Value Machine::load_prop(int prop, int index, bool) { return props_[prop][index]; }

void Machine::store_prop(const Stmt&, int prop, int index, bool, const Value& v) {
  props_[prop][index] = v;
}

void Machine::reduce_prop(const Stmt& s, const Place& p, ReduceOp op, const Value& v) {
  store_prop(s, p.symbol, p.index, p.edge,
             reduce_value(op, load_prop(p.symbol, p.index, p.edge), v, p.prim));
}

void Machine::minmax(const Stmt& s, Comparator c, const std::vector<Place>& targets,
                     const Value& candidate, const std::vector<Value>& companions) {
  if (!beats(c, candidate, load(targets[0]))) return;
  store(s, targets[0], candidate);
  for (std::size_t i = 0; i < companions.size(); ++i) store(s, targets[i + 1], companions[i]);
}

Value Machine::load_scalar(int symbol) { return scalars_[symbol]; }

void Machine::reduce_scalar(int symbol, ReduceOp op, const Value& v) {
  scalars_[symbol] = reduce_value(op, scalars_[symbol], v, tp_.symbols[symbol].type.prim);
}

// ------------------------------------------------------------ expressions

Value Machine::eval(const Expr& e) {
  const ExprInfo& info = tp_.info(e);
  if (auto* n = e.as<Identifier>()) {
    (void)n;
    if (info.implicit_iterator >= 0)
      return load_prop(info.symbol, static_cast<int>(scalars_[info.implicit_iterator].i), false);
    if (info.property_any) return Value::of_bool(any_true(info.symbol));
    if (in_region() && is_shared_scalar(info.symbol)) return load_scalar(info.symbol);
    const Value& v = scalars_[info.symbol];
    if (v.kind == Value::Kind::None)
      throw RuntimeError("'" + tp_.symbols[info.symbol].name + "' is used before it has a value",
                         e.span.begin);
    return v;
  }
  if (auto* n = e.as<Literal>()) {
    switch (n->kind) {
      case Literal::Kind::Bool: return Value::of_bool(n->text == "True");
      case Literal::Kind::IntMax: return Value::of_int(std::numeric_limits<std::int32_t>::max());
      case Literal::Kind::Float: return Value::of_double(std::strtod(n->text.c_str(), nullptr));
      case Literal::Kind::Int: {
        const long long v = std::stoll(n->text);
        return info.type.prim == Primitive::Long ? Value::of_long(v) : Value::of_int(v);
      }
    }
  }
  if (auto* n = e.as<MemberAccess>()) {
    const Value obj = eval(*n->object);
    const bool edge = obj.kind == Value::Kind::Edge;
    const int limit = edge ? g_.m : g_.n;
    if (obj.i < 0 || obj.i >= limit)
      throw RuntimeError("'" + n->property + "' read on an invalid " + (edge ? "edge" : "node"),
                         e.span.begin);
    if (edge && info.symbol < 0) return Value::of_int(g_.weights[obj.i]);
    return load_prop(info.symbol, static_cast<int>(obj.i), edge);
  }
  if (auto* n = e.as<UnaryExpr>()) {
    const Value v = eval(*n->operand);
    return n->op == UnaryOp::Not ? Value::of_bool(!v.truthy()) : negate(v);
  }
  if (auto* n = e.as<BinaryExpr>()) {
    if (n->op == BinaryOp::And) return Value::of_bool(eval(*n->lhs).truthy() && eval(*n->rhs).truthy());
    if (n->op == BinaryOp::Or) return Value::of_bool(eval(*n->lhs).truthy() || eval(*n->rhs).truthy());
    const Value l = eval(*n->lhs);
    const Value r = eval(*n->rhs);
    switch (n->op) {
      case BinaryOp::Add:
      case BinaryOp::Sub:
      case BinaryOp::Mul:
      case BinaryOp::Div:
        try {
          return arith(n->op, l, r, info.type.prim);
        } catch (const RuntimeError& err) {
          throw RuntimeError(err.what(), e.span.begin);
        }
      default: return Value::of_bool(compare(n->op, l, r));
    }
  }
  const auto& call = *e.as<ProcCallExpr>();
  auto node_arg = [&](std::size_t i) {
    const Value v = eval(*call.args[i].value);
    if (v.kind != Value::Kind::Node || v.i < 0 || v.i >= g_.n)
      throw RuntimeError("argument of " + call.method + " is not a vertex", e.span.begin);
    return static_cast<int>(v.i);
  };
  switch (info.method) {
    case GraphMethod::NumNodes: return Value::of_int(g_.n);
    case GraphMethod::NumEdges: return Value::of_int(g_.m);
    case GraphMethod::CountOutNbrs: return Value::of_int(g_.out_degree(node_arg(0)));
    case GraphMethod::MinWt:
      try {
        return Value::of_int(min_wt(g_));
      } catch (const Error& err) {
        throw RuntimeError(err.what(), e.span.begin);
      }
    case GraphMethod::MaxWt:
      try {
        return Value::of_int(max_wt(g_));
      } catch (const Error& err) {
        throw RuntimeError(err.what(), e.span.begin);
      }
    case GraphMethod::IsAnEdge: {
      const int u = node_arg(0);
      const int w = node_arg(1);
      return Value::of_bool(g_.is_an_edge(u, w));
    }
    case GraphMethod::GetEdge: {
      const int a = node_arg(0);
      const int b = node_arg(1);
      for (auto ctx = loops_.rbegin(); ctx != loops_.rend(); ++ctx) {
        if (ctx->edge < 0) continue;
        const int cur = static_cast<int>(scalars_[ctx->iterator].i);
        const bool forward = ctx->method != GraphMethod::NodesTo && a == ctx->source && b == cur;
        const bool backward = ctx->method == GraphMethod::NodesTo && a == cur && b == ctx->source;
        if (forward || backward) return Value::of_edge(ctx->edge);
      }
      const int found = g_.find_edge(a, b);
      if (found < 0)
        throw RuntimeError("no edge " + std::to_string(a) + " -> " + std::to_string(b), e.span.begin);
      return Value::of_edge(found);
    }
    default: break;
  }
  throw RuntimeError(call.method + " cannot be used as a value", e.span.begin);
}

}  // namespace detail

RunResult run(const TypedProgram& tp, const CsrGraph& g, const ArgMap& args, const RunOptions& options) {
  detail::Machine m(tp, g, options);
  return m.run(args);
}

}  // namespace starplat
