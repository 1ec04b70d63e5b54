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

#include "starplat/sema.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "starplat/parser.hpp"

namespace starplat {

using namespace ast;

std::string_view to_string(TransferDirection d) {
  switch (d) {
    case TransferDirection::HostToDeviceOnce: return "host-to-device-once";
    case TransferDirection::DeviceToHostAtEnd: return "device-to-host-at-end";
    case TransferDirection::RoundTripPerIteration: return "round-trip-per-iteration";
    case TransferDirection::DeviceOnly: return "device-only";
  }
  return "?";
}

const TransferEntry* TransferPlan::find(std::string_view name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

int TypedProgram::function_index(std::string_view name) const {
  for (std::size_t i = 0; i < program.functions.size(); ++i)
    if (program.functions[i].name == name) return static_cast<int>(i);
  return -1;
}

namespace {

struct ExprCtx {
  int filter_iterator = -1;
  bool convergence = false;
};

const std::map<std::string, GraphMethod, std::less<>>& graph_methods() {
  static const std::map<std::string, GraphMethod, std::less<>> m = {
      {"nodes", GraphMethod::Nodes},
      {"neighbors", GraphMethod::Neighbors},
      {"nodesTo", GraphMethod::NodesTo},
      {"nodesFrom", GraphMethod::NodesFrom},
      {"attachNodeProperty", GraphMethod::AttachNodeProperty},
      {"attachEdgeProperty", GraphMethod::AttachEdgeProperty},
      {"num_nodes", GraphMethod::NumNodes},
      {"num_edges", GraphMethod::NumEdges},
      {"count_outNbrs", GraphMethod::CountOutNbrs},
      {"get_edge", GraphMethod::GetEdge},
      {"minWt", GraphMethod::MinWt},
      {"maxWt", GraphMethod::MaxWt},
      {"is_an_edge", GraphMethod::IsAnEdge},
  };
  return m;
}

bool assignable(const DslType& to, const DslType& from) {
  if (to.kind == DslType::Kind::Primitive && from.kind == DslType::Kind::Primitive) {
    if (to.prim == Primitive::Bool || from.prim == Primitive::Bool) return to.prim == from.prim;
    return true;
  }
  return to.same(from);
}

bool is_true_literal(const Expr& e) {
  auto* lit = e.as<Literal>();
  return lit && lit->kind == Literal::Kind::Bool && lit->text == "True";
}

bool is_false_literal(const Expr& e) {
  auto* lit = e.as<Literal>();
  return lit && lit->kind == Literal::Kind::Bool && lit->text == "False";
}

class Checker {
 public:
  explicit Checker(TypedProgram& tp) : tp_(tp) {
    tp_.exprs.assign(tp_.program.node_count, ExprInfo{});
    tp_.stmts.assign(tp_.program.node_count, StmtInfo{});
  }

  void run() {
    std::set<std::string> names;
    for (std::size_t i = 0; i < tp_.program.functions.size(); ++i) {
      auto& fn = tp_.program.functions[i];
      if (!names.insert(fn.name).second)
        throw TypeError("function '" + fn.name + "' is defined twice", fn.span.begin);
      function(static_cast<int>(i), fn);
    }
  }

 private:
  // ------------------------------------------------------------- scopes

  int declare(const std::string& name, DslType type, Span span, StorageClass storage,
              bool is_iterator = false) {
    auto& scope = scopes_.back();
    if (scope.count(name))
      throw TypeError("'" + name + "' is already declared in this scope", span.begin);
    Symbol s;
    s.index = static_cast<int>(tp_.symbols.size());
    s.name = name;
    s.type = std::move(type);
    s.span = span;
    s.storage = storage;
    s.function = fn_;
    s.top_level = scopes_.size() == 1;
    s.region = region_;
    s.is_iterator = is_iterator;
    tp_.symbols.push_back(s);
    scope[name] = s.index;
    if (s.top_level) tp_.functions[fn_].top_level.push_back(s.index);
    return s.index;
  }

  int lookup(const std::string& name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto f = it->find(name);
      if (f != it->end()) return f->second;
    }
    return -1;
  }

  struct ScopeGuard {
    Checker& c;
    explicit ScopeGuard(Checker& ch) : c(ch) { c.scopes_.emplace_back(); }
    ~ScopeGuard() { c.scopes_.pop_back(); }
  };

  RegionInfo* region() { return region_ < 0 ? nullptr : &tp_.regions[region_]; }

  void note_read(int sym) {
    if (sym < 0) return;
    if (auto* r = region()) {
      r->reads.insert(sym);
    } else {
      for (auto loop : host_loops_) tp_.host_loop_reads[loop].insert(sym);
    }
  }

  void note_write(int sym) {
    if (sym < 0) return;
    if (auto* r = region()) r->writes.insert(sym);
  }

  void warn(SourcePos pos, std::string message) {
    tp_.warnings.push_back(Diagnostic{Severity::Warning, pos, std::move(message)});
  }

  // ---------------------------------------------------------- functions

  void function(int index, Function& fn) {
    fn_ = index;
    tp_.functions.emplace_back();
    attached_.clear();
    ScopeGuard scope(*this);
    for (auto& p : fn.params) {
      if (p.type.is(DslType::Kind::PropNode) || p.type.is(DslType::Kind::PropEdge))
        throw TypeError("properties cannot be passed as parameters", p.span.begin);
      int sym = declare(p.name, p.type, p.span, StorageClass::Parameter);
      tp_.functions[index].params.push_back(sym);
      if (p.type.is(DslType::Kind::Graph) && tp_.functions[index].graph_param < 0)
        tp_.functions[index].graph_param = sym;
    }
    for (auto& s : fn.body.stmts) statement(*s);
  }

  void block(BlockStmt& b) {
    ScopeGuard scope(*this);
    for (auto& s : b.stmts) statement(*s);
  }

  // --------------------------------------------------------- statements

  void statement(Stmt& s) {
    auto& info = tp_.stmts[s.id];
    info.region = region_;
    std::visit([&](auto& n) { stmt(s, info, n); }, s.node);
  }

  void stmt(Stmt&, StmtInfo&, BlockStmt& n) { block(n); }

  void stmt(Stmt& s, StmtInfo& info, DeclStmt& n) {
    const bool property = n.type.is_property();
    if (property && n.init)
      throw TypeError("property '" + n.name + "' cannot have an initialiser; use attachNodeProperty",
                      s.span.begin);
    if (property && region_ >= 0)
      throw TypeError("properties cannot be declared inside a parallel loop", s.span.begin);
    if (n.type.is(DslType::Kind::Graph))
      throw TypeError("a Graph can only be a function parameter", s.span.begin);
    if (n.init) {
      DslType t = expr(*n.init, {});
      if (!assignable(n.type, t))
        throw TypeError("cannot initialise '" + n.name + "' of type " + to_string(n.type) +
                            " with a value of type " + to_string(t),
                        n.init->span.begin);
    }
    StorageClass storage = property ? StorageClass::Property
                           : region_ >= 0 ? StorageClass::ForallLocal
                                          : StorageClass::Local;
    info.decl = declare(n.name, n.type, s.span, storage);
    if (n.init) note_write(info.decl);
  }

  struct LValue {
    int symbol = -1;
    bool element = false;  // property element (x.p)
    bool owned = false;    // element of the region iterator
    bool edge = false;
    DslType type;
  };

  LValue lvalue(Expr& e) {
    LValue lv;
    if (auto* id = e.as<Identifier>()) {
      int sym = lookup(id->name);
      if (sym < 0) throw TypeError("undeclared identifier '" + id->name + "'", e.span.begin);
      const Symbol& s = tp_.symbols[sym];
      if (s.type.is(DslType::Kind::Graph))
        throw TypeError("cannot assign to Graph '" + id->name + "'", e.span.begin);
      if (s.is_iterator)
        throw TypeError("cannot assign to loop variable '" + id->name + "'", e.span.begin);
      tp_.exprs[e.id].symbol = sym;
      tp_.exprs[e.id].type = s.type;
      lv.symbol = sym;
      lv.type = s.type;
    } else if (auto* m = e.as<MemberAccess>()) {
      DslType t = member(e, *m, {}, /*is_write=*/true);
      lv.symbol = tp_.exprs[e.id].symbol;
      lv.element = true;
      lv.type = t;
      lv.edge = tp_.exprs[m->object->id].type.is(DslType::Kind::Edge);
      if (auto* obj = m->object->as<Identifier>()) {
        int osym = tp_.exprs[m->object->id].symbol;
        lv.owned = region_ >= 0 && osym == tp_.regions[region_].iterator;
        (void)obj;
      }
      if (lv.symbol < 0) throw TypeError("the built-in edge weight is read-only", e.span.begin);
    } else {
      throw TypeError("expected a variable or property element on the left of an assignment",
                      e.span.begin);
    }
    note_write(lv.symbol);
    return lv;
  }

  TargetClass classify(const LValue& lv) const {
    if (lv.element) return TargetClass::Property;
    if (region_ < 0) return TargetClass::LocalScalar;
    return tp_.symbols[lv.symbol].region >= 0 ? TargetClass::LocalScalar : TargetClass::SharedScalar;
  }

  void mark_remote(Stmt& s, StmtInfo& info, const LValue& lv) {
    if (region_ >= 0 && lv.element && !lv.owned && !lv.edge) {
      info.remote_write = true;
      tp_.regions[region_].remote_write_sites.push_back(s.id);
    }
  }

  void stmt(Stmt& s, StmtInfo& info, AssignStmt& n) {
    LValue lv = lvalue(*n.lvalue);
    if (lv.type.is_property()) {
      // Whole-property copy.
      auto* rhs = n.value->as<Identifier>();
      int rsym = rhs ? lookup(rhs->name) : -1;
      if (rsym < 0 || !tp_.symbols[rsym].type.same(lv.type))
        throw TypeError("a whole property can only be assigned another property of type " +
                            to_string(lv.type),
                        n.value->span.begin);
      if (region_ >= 0)
        throw TypeError("whole-property assignment is only allowed outside parallel loops",
                        s.span.begin);
      require_attached(rsym, n.value->span.begin);
      tp_.exprs[n.value->id].symbol = rsym;
      tp_.exprs[n.value->id].type = tp_.symbols[rsym].type;
      note_read(rsym);
      attached_.insert(lv.symbol);
      info.whole_copy = true;
      info.target = TargetClass::Property;
      return;
    }
    DslType t = expr(*n.value, {});
    if (!assignable(lv.type, t))
      throw TypeError("cannot assign a value of type " + to_string(t) + " to " + to_string(lv.type),
                      n.value->span.begin);
    info.target = classify(lv);
    mark_remote(s, info, lv);
    if (region_ >= 0) {
      const std::string what = pretty_print(*n.lvalue);
      if (info.target == TargetClass::SharedScalar)
        warn(s.span.begin, "plain assignment to shared scalar '" + what +
                               "' inside a parallel loop may race; use a reduction or Min/Max");
      else if (info.remote_write)
        warn(s.span.begin, "plain assignment to '" + what +
                               "' writes a vertex other than the loop variable and may race; "
                               "use a reduction or Min/Max");
    }
  }

  void stmt(Stmt& s, StmtInfo& info, ReductionAssign& n) {
    LValue lv = lvalue(*n.lvalue);
    const DslType& t = lv.type;
    switch (n.op) {
      case ReduceOp::Sum:
      case ReduceOp::Product: {
        if (!t.is_numeric())
          throw TypeError(std::string("operator ") + std::string(to_string(n.op)) +
                              " needs a numeric target",
                          n.lvalue->span.begin);
        DslType v = expr(*n.value, {});
        if (!v.is_numeric())
          throw TypeError("reduction operand must be numeric, found " + to_string(v),
                          n.value->span.begin);
        break;
      }
      case ReduceOp::Count:
        if (!t.is_integral())
          throw TypeError("operator ++ needs an int or long target", n.lvalue->span.begin);
        break;
      case ReduceOp::All:
      case ReduceOp::Any: {
        if (lv.element)
          throw TypeError(std::string("operator ") + std::string(to_string(n.op)) +
                              " applies to scalars only",
                          n.lvalue->span.begin);
        if (!t.is_bool())
          throw TypeError(std::string("operator ") + std::string(to_string(n.op)) +
                              " needs a bool target",
                          n.lvalue->span.begin);
        DslType v = expr(*n.value, {});
        if (!v.is_bool())
          throw TypeError("reduction operand must be bool, found " + to_string(v),
                          n.value->span.begin);
        break;
      }
    }
    info.target = classify(lv);
    mark_remote(s, info, lv);
    if (info.target == TargetClass::SharedScalar) {
      auto& red = tp_.regions[region_].reductions;
      std::pair<int, ReduceOp> entry{lv.symbol, n.op};
      if (n.op == ReduceOp::Count) entry.second = ReduceOp::Sum;
      for (auto& [sym, op] : red)
        if (sym == lv.symbol && op != entry.second)
          throw TypeError("'" + tp_.symbols[sym].name +
                              "' is reduced with two different operators in one parallel loop",
                          s.span.begin);
      if (std::find(red.begin(), red.end(), entry) == red.end()) red.push_back(entry);
    }
  }

  void stmt(Stmt& s, StmtInfo& info, MinMaxAssign& n) {
    if (n.targets.size() != n.companions.size() + 1)
      throw TypeError("Min/Max assignment has " + std::to_string(n.targets.size()) +
                          " targets but " + std::to_string(n.companions.size() + 1) + " values",
                      s.span.begin);
    std::vector<LValue> lvs;
    for (auto& t : n.targets) lvs.push_back(lvalue(*t));
    if (pretty_print(*n.current) != pretty_print(*n.targets[0]))
      throw TypeError("the first argument of " + std::string(to_string(n.comparator)) +
                          " must be the first target '" + pretty_print(*n.targets[0]) + "'",
                      n.current->span.begin);
    DslType cur = expr(*n.current, {});
    DslType cand = expr(*n.candidate, {});
    if (!cur.is_numeric() || !cand.is_numeric())
      throw TypeError(std::string(to_string(n.comparator)) + " compares numeric values",
                      n.candidate->span.begin);
    for (std::size_t i = 0; i < n.companions.size(); ++i) {
      DslType c = expr(*n.companions[i], {});
      if (!assignable(lvs[i + 1].type, c))
        throw TypeError("cannot assign a value of type " + to_string(c) + " to " +
                            to_string(lvs[i + 1].type),
                        n.companions[i]->span.begin);
    }
    info.target = classify(lvs[0]);
    for (std::size_t i = 0; i < lvs.size(); ++i) {
      if (region_ < 0) break;
      if (lvs[i].element != lvs[0].element)
        throw TypeError("Min/Max targets inside a parallel loop must all be properties or all scalars",
                        n.targets[i]->span.begin);
      auto* m = n.targets[i]->as<MemberAccess>();
      if (m && pretty_print(*m->object) != pretty_print(*n.targets[0]->as<MemberAccess>()->object))
        throw TypeError("Min/Max targets inside a parallel loop must belong to the same vertex",
                        n.targets[i]->span.begin);
    }
    mark_remote(s, info, lvs[0]);
    if (info.target == TargetClass::SharedScalar) {
      if (lvs.size() > 1)
        throw TypeError("Min/Max on a shared scalar cannot carry companion values", s.span.begin);
      auto& mm = tp_.regions[region_].minmax_scalars;
      std::pair<int, Comparator> entry{lvs[0].symbol, n.comparator};
      if (std::find(mm.begin(), mm.end(), entry) == mm.end()) mm.push_back(entry);
    }
  }

  DslType range(Expr& e, int& graph_sym) {
    auto* call = e.as<ProcCallExpr>();
    if (!call) {
      if (auto* id = e.as<Identifier>()) {
        int sym = lookup(id->name);
        if (sym < 0) throw TypeError("undeclared identifier '" + id->name + "'", e.span.begin);
        const DslType& t = tp_.symbols[sym].type;
        tp_.exprs[e.id].symbol = sym;
        tp_.exprs[e.id].type = t;
        note_read(sym);
        if (t.is(DslType::Kind::SetN)) return DslType::node_t();
        throw TypeError("cannot iterate over '" + id->name + "' of type " + to_string(t) +
                            "; only node sets can be iterated",
                        e.span.begin);
      }
      throw TypeError("expected g.nodes(), g.neighbors(v), g.nodesTo(v) or a node set",
                      e.span.begin);
    }
    DslType t = expr(e, {});
    if (!t.is(DslType::Kind::NodeSeq))
      throw TypeError("expected g.nodes(), g.neighbors(v), g.nodesTo(v) or a node set",
                      e.span.begin);
    graph_sym = tp_.exprs[call->receiver->id].symbol;
    return DslType::node_t();
  }

  void stmt(Stmt& s, StmtInfo& info, ForallStmt& n) {
    int graph_sym = -1;
    DslType it_type = range(*n.range, graph_sym);
    ScopeGuard scope(*this);
    const bool opens_region = n.is_parallel && region_ < 0;
    const NodeId saved_region = region_;
    if (opens_region) {
      region_ = s.id;
      RegionInfo r;
      r.stmt = s.id;
      r.kind = RegionKind::Forall;
      r.function = fn_;
      tp_.regions[s.id] = r;
      tp_.functions[fn_].regions.push_back(s.id);
      info.parallel = true;
    }
    info.region = region_;
    info.iterator = declare(n.iterator, it_type, n.iterator_span, StorageClass::ForallLocal, true);
    if (opens_region) tp_.regions[s.id].iterator = info.iterator;
    if (n.filter) {
      ExprCtx ctx;
      ctx.filter_iterator = info.iterator;
      DslType f = expr(*n.filter, ctx);
      if (!f.is_bool())
        throw TypeError("filter condition must be bool, found " + to_string(f), n.filter->span.begin);
    }
    const bool host_loop = region_ < 0;
    if (host_loop) host_loops_.push_back(s.id);
    for (auto& st : n.body->stmts) statement(*st);
    if (host_loop) host_loops_.pop_back();
    region_ = saved_region;
  }

  void stmt(Stmt& s, StmtInfo&, FixedPointStmt& n) {
    if (region_ >= 0)
      throw TypeError("fixedPoint cannot appear inside a parallel loop", s.span.begin);
    int flag = lookup(n.flag);
    if (flag < 0) throw TypeError("undeclared identifier '" + n.flag + "'", n.flag_span.begin);
    if (!tp_.symbols[flag].type.is_bool())
      throw TypeError("fixedPoint flag '" + n.flag + "' must be a bool scalar", n.flag_span.begin);
    FixedPointInfo fp;
    fp.stmt = s.id;
    fp.function = fn_;
    fp.flag = flag;
    tp_.fixed_points[s.id] = fp;
    tp_.functions[fn_].fixed_points.push_back(s.id);
    host_loops_.push_back(s.id);
    ExprCtx ctx;
    ctx.convergence = true;
    DslType c = expr(*n.convergence, ctx);
    if (!c.is_bool())
      throw TypeError("convergence expression must be bool, found " + to_string(c),
                      n.convergence->span.begin);
    block(*n.body);
    host_loops_.pop_back();
  }

  void stmt(Stmt& s, StmtInfo& info, IterateInBfsStmt& n) {
    if (region_ >= 0)
      throw TypeError("iterateInBFS cannot appear inside a parallel loop", s.span.begin);
    auto* call = n.range->as<ProcCallExpr>();
    DslType r = expr(*n.range, {});
    if (!call || tp_.exprs[n.range->id].method != GraphMethod::Nodes || !r.is(DslType::Kind::NodeSeq))
      throw TypeError("iterateInBFS ranges over g.nodes()", n.range->span.begin);
    DslType root = expr(*n.root, {});
    if (!root.is(DslType::Kind::Node))
      throw TypeError("BFS root must be a node, found " + to_string(root), n.root->span.begin);

    auto body = [&](BlockStmt& b, RegionKind kind, NodeId id) {
      ScopeGuard scope(*this);
      region_ = id;
      RegionInfo ri;
      ri.stmt = id;
      ri.kind = kind;
      ri.function = fn_;
      tp_.regions[id] = ri;
      tp_.functions[fn_].regions.push_back(id);
      int it = declare(n.iterator, DslType::node_t(), n.iterator_span, StorageClass::ForallLocal, true);
      tp_.regions[id].iterator = it;
      if (kind == RegionKind::BfsForward) info.iterator = it;
      for (auto& st : b.stmts) statement(*st);
      region_ = -1;
    };
    body(*n.body, RegionKind::BfsForward, s.id);
    if (n.reverse_body) body(*n.reverse_body, RegionKind::BfsReverse, tp_.reverse_region(s.id));
  }

  void stmt(Stmt&, StmtInfo&, IfStmt& n) {
    DslType c = expr(*n.condition, {});
    if (!c.is_bool())
      throw TypeError("if condition must be bool, found " + to_string(c), n.condition->span.begin);
    block(*n.then_body);
    if (n.else_body) block(*n.else_body);
  }

  void stmt(Stmt& s, StmtInfo&, ReturnStmt& n) {
    if (region_ >= 0) throw TypeError("return cannot appear inside a parallel loop", s.span.begin);
    auto& fi = tp_.functions[fn_];
    if (!n.value) return;
    DslType t = expr(*n.value, {});
    if (t.kind != DslType::Kind::Primitive)
      throw TypeError("only scalar values can be returned, found " + to_string(t),
                      n.value->span.begin);
    if (fi.returns_value && !fi.return_type.same(t))
      throw TypeError("conflicting return types " + to_string(fi.return_type) + " and " +
                          to_string(t),
                      n.value->span.begin);
    fi.returns_value = true;
    fi.return_type = t;
  }

  void stmt(Stmt& s, StmtInfo&, ExprStmt& n) {
    DslType t = expr(*n.expr, {});
    if (!t.is(DslType::Kind::Void))
      throw TypeError("expression result is unused", s.span.begin);
  }

  // -------------------------------------------------------- expressions

  void require_attached(int sym, SourcePos pos) {
    if (!attached_.count(sym))
      throw TypeError("property '" + tp_.symbols[sym].name + "' is used before it is attached",
                      pos);
  }

  DslType expr(Expr& e, const ExprCtx& ctx) {
    DslType t = std::visit([&](auto& n) { return node(e, n, ctx); }, e.node);
    tp_.exprs[e.id].type = t;
    return t;
  }

  DslType node(Expr& e, Identifier& n, const ExprCtx& ctx) {
    int sym = lookup(n.name);
    if (sym < 0) throw TypeError("undeclared identifier '" + n.name + "'", e.span.begin);
    auto& info = tp_.exprs[e.id];
    info.symbol = sym;
    const Symbol& s = tp_.symbols[sym];
    note_read(sym);
    if (s.type.is(DslType::Kind::PropNode)) {
      require_attached(sym, e.span.begin);
      if (ctx.filter_iterator >= 0) {
        info.implicit_iterator = ctx.filter_iterator;
        if (region_ >= 0 && ctx.filter_iterator != tp_.regions[region_].iterator)
          tp_.regions[region_].remote_reads.insert(sym);
        return DslType::prim_t(s.type.prim);
      }
      if (ctx.convergence && s.type.prim == Primitive::Bool) {
        info.property_any = true;
        return DslType::prim_t(Primitive::Bool);
      }
      throw TypeError("property '" + n.name + "' must be accessed through a node (v." + n.name + ")",
                      e.span.begin);
    }
    if (s.type.is(DslType::Kind::PropEdge))
      throw TypeError("property '" + n.name + "' must be accessed through an edge", e.span.begin);
    return s.type;
  }

  DslType node(Expr& e, Literal& n, const ExprCtx&) {
    switch (n.kind) {
      case Literal::Kind::Bool: return DslType::prim_t(Primitive::Bool);
      case Literal::Kind::Float: return DslType::prim_t(Primitive::Double);
      case Literal::Kind::IntMax: return DslType::prim_t(Primitive::Int);
      case Literal::Kind::Int: {
        unsigned long long v = 0;
        try {
          v = std::stoull(n.text);
        } catch (const std::exception&) {
          throw TypeError("integer literal " + n.text + " is out of range", e.span.begin);
        }
        if (v > static_cast<unsigned long long>(std::numeric_limits<long long>::max()))
          throw TypeError("integer literal " + n.text + " is out of range", e.span.begin);
        return DslType::prim_t(v > static_cast<unsigned long long>(std::numeric_limits<int>::max())
                                   ? Primitive::Long
                                   : Primitive::Int);
      }
    }
    return DslType::void_t();
  }

  DslType member(Expr& e, MemberAccess& n, const ExprCtx& ctx, bool is_write = false) {
    DslType obj = expr(*n.object, ctx);
    auto& info = tp_.exprs[e.id];
    int sym = lookup(n.property);
    if (obj.is(DslType::Kind::Node)) {
      if (sym < 0 || !tp_.symbols[sym].type.is(DslType::Kind::PropNode))
        throw TypeError("'" + n.property + "' is not a node property", e.span.begin);
      if (!is_write) require_attached(sym, e.span.begin);
    } else if (obj.is(DslType::Kind::Edge)) {
      if (sym < 0 || !tp_.symbols[sym].type.is(DslType::Kind::PropEdge)) {
        if (n.property == "weight") {
          info.symbol = -1;
          return DslType::prim_t(Primitive::Int);
        }
        throw TypeError("'" + n.property + "' is not an edge property", e.span.begin);
      }
      if (!is_write) require_attached(sym, e.span.begin);
    } else {
      throw TypeError("cannot access property '" + n.property + "' of a value of type " +
                          to_string(obj),
                      n.object->span.begin);
    }
    info.symbol = sym;
    if (!is_write) {
      note_read(sym);
      if (region_ >= 0 && obj.is(DslType::Kind::Node) &&
          tp_.exprs[n.object->id].symbol != tp_.regions[region_].iterator)
        tp_.regions[region_].remote_reads.insert(sym);
    }
    return DslType::prim_t(tp_.symbols[sym].type.prim);
  }

  DslType node(Expr& e, MemberAccess& n, const ExprCtx& ctx) { return member(e, n, ctx); }

  DslType node(Expr& e, UnaryExpr& n, const ExprCtx& ctx) {
    DslType t = expr(*n.operand, ctx);
    if (n.op == UnaryOp::Not) {
      if (!t.is_bool()) throw TypeError("operator ! needs a bool operand, found " + to_string(t), e.span.begin);
      return t;
    }
    if (!t.is_numeric())
      throw TypeError("unary - needs a numeric operand, found " + to_string(t), e.span.begin);
    return t;
  }

  DslType node(Expr& e, BinaryExpr& n, const ExprCtx& ctx) {
    DslType l = expr(*n.lhs, ctx);
    DslType r = expr(*n.rhs, ctx);
    const std::string op(to_string(n.op));
    auto mismatch = [&]() -> TypeError {
      return TypeError("operator " + op + " cannot combine " + to_string(l) + " and " + to_string(r),
                       e.span.begin);
    };
    switch (n.op) {
      case BinaryOp::Add:
      case BinaryOp::Sub:
      case BinaryOp::Mul:
      case BinaryOp::Div:
        if (!l.is_numeric() || !r.is_numeric()) throw mismatch();
        return DslType::prim_t(promote(l.prim, r.prim));
      case BinaryOp::Lt:
      case BinaryOp::Le:
      case BinaryOp::Gt:
      case BinaryOp::Ge:
        if ((l.is_numeric() && r.is_numeric()) ||
            (l.is(DslType::Kind::Node) && r.is(DslType::Kind::Node)))
          return DslType::prim_t(Primitive::Bool);
        throw mismatch();
      case BinaryOp::Eq:
      case BinaryOp::Ne:
        if ((l.is_numeric() && r.is_numeric()) || (l.is_bool() && r.is_bool()) ||
            (l.is(DslType::Kind::Node) && r.is(DslType::Kind::Node)) ||
            (l.is(DslType::Kind::Edge) && r.is(DslType::Kind::Edge)))
          return DslType::prim_t(Primitive::Bool);
        throw mismatch();
      case BinaryOp::And:
      case BinaryOp::Or:
        if (!l.is_bool() || !r.is_bool()) throw mismatch();
        return l;
    }
    throw mismatch();
  }

  void expect_args(Expr& e, const ProcCallExpr& n, std::size_t count) {
    if (n.args.size() != count)
      throw TypeError(n.method + " takes " + std::to_string(count) + " argument" +
                          (count == 1 ? "" : "s") + ", found " + std::to_string(n.args.size()),
                      e.span.begin);
    for (const auto& a : n.args)
      if (a.name) throw TypeError(n.method + " takes no named arguments", a.value->span.begin);
  }

  void expect_node_arg(ProcCallExpr& n, std::size_t i, const ExprCtx& ctx) {
    DslType t = expr(*n.args[i].value, ctx);
    if (!t.is(DslType::Kind::Node))
      throw TypeError(n.method + " expects a node argument, found " + to_string(t),
                      n.args[i].value->span.begin);
  }

  DslType node(Expr& e, ProcCallExpr& n, const ExprCtx& ctx) {
    if (!n.receiver) throw TypeError("unknown function '" + n.method + "'", e.span.begin);
    DslType recv = expr(*n.receiver, ctx);
    if (!recv.is(DslType::Kind::Graph))
      throw TypeError("'" + n.method + "' is called on a value of type " + to_string(recv) +
                          "; graph methods need a Graph receiver",
                      n.receiver->span.begin);
    auto it = graph_methods().find(n.method);
    if (it == graph_methods().end())
      throw TypeError("Graph has no method '" + n.method + "'", e.span.begin);
    auto& info = tp_.exprs[e.id];
    info.method = it->second;
    switch (it->second) {
      case GraphMethod::Nodes:
        expect_args(e, n, 0);
        return DslType::node_seq();
      case GraphMethod::Neighbors:
      case GraphMethod::NodesTo:
      case GraphMethod::NodesFrom:
        expect_args(e, n, 1);
        expect_node_arg(n, 0, ctx);
        return DslType::node_seq();
      case GraphMethod::NumNodes:
      case GraphMethod::NumEdges:
      case GraphMethod::MinWt:
      case GraphMethod::MaxWt:
        expect_args(e, n, 0);
        return DslType::prim_t(Primitive::Int);
      case GraphMethod::CountOutNbrs:
        expect_args(e, n, 1);
        expect_node_arg(n, 0, ctx);
        return DslType::prim_t(Primitive::Int);
      case GraphMethod::GetEdge:
        expect_args(e, n, 2);
        expect_node_arg(n, 0, ctx);
        expect_node_arg(n, 1, ctx);
        return DslType::edge_t();
      case GraphMethod::IsAnEdge:
        expect_args(e, n, 2);
        expect_node_arg(n, 0, ctx);
        expect_node_arg(n, 1, ctx);
        return DslType::prim_t(Primitive::Bool);
      case GraphMethod::AttachNodeProperty:
      case GraphMethod::AttachEdgeProperty: {
        if (region_ >= 0)
          throw TypeError(n.method + " cannot be called inside a parallel loop", e.span.begin);
        if (n.args.empty()) throw TypeError(n.method + " needs at least one property", e.span.begin);
        const auto kind = it->second == GraphMethod::AttachNodeProperty ? DslType::Kind::PropNode
                                                                        : DslType::Kind::PropEdge;
        std::set<int> seen;
        for (auto& a : n.args) {
          if (!a.name)
            throw TypeError(n.method + " arguments must be named (prop = value)", a.value->span.begin);
          int sym = lookup(*a.name);
          if (sym < 0 || !tp_.symbols[sym].type.is(kind))
            throw TypeError("'" + *a.name + "' is not a " +
                                (kind == DslType::Kind::PropNode ? "node" : "edge") + " property",
                            a.value->span.begin);
          if (!seen.insert(sym).second)
            throw TypeError("'" + *a.name + "' is attached twice in one call", a.value->span.begin);
          DslType v = expr(*a.value, {});
          if (!assignable(DslType::prim_t(tp_.symbols[sym].type.prim), v))
            throw TypeError("cannot initialise " + to_string(tp_.symbols[sym].type) + " '" + *a.name +
                                "' with a value of type " + to_string(v),
                            a.value->span.begin);
          info.attach_symbols.push_back(sym);
        }
        for (int sym : info.attach_symbols) attached_.insert(sym);
        return DslType::void_t();
      }
      case GraphMethod::None: break;
    }
    return DslType::void_t();
  }

  TypedProgram& tp_;
  std::vector<std::map<std::string, int>> scopes_;
  int fn_ = -1;
  NodeId region_ = -1;
  std::vector<NodeId> host_loops_;
  std::set<int> attached_;
};

// ------------------------------------------------------------ fixedPoint

void collect_reads(const TypedProgram& tp, const Expr& e, std::set<int>& out) {
  const auto& info = tp.exprs[e.id];
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Identifier>) {
          if (info.symbol >= 0) out.insert(info.symbol);
        } else if constexpr (std::is_same_v<T, MemberAccess>) {
          if (info.symbol >= 0) out.insert(info.symbol);
          collect_reads(tp, *n.object, out);
        } else if constexpr (std::is_same_v<T, UnaryExpr>) {
          collect_reads(tp, *n.operand, out);
        } else if constexpr (std::is_same_v<T, BinaryExpr>) {
          collect_reads(tp, *n.lhs, out);
          collect_reads(tp, *n.rhs, out);
        } else if constexpr (std::is_same_v<T, ProcCallExpr>) {
          for (const auto& a : n.args) collect_reads(tp, *a.value, out);
        }
      },
      e.node);
}

int target_symbol(const TypedProgram& tp, const Expr& lv) { return tp.exprs[lv.id].symbol; }

/// Calls `fn(stmt)` for every statement nested in `b`.
void walk(const BlockStmt& b, const std::function<void(const Stmt&)>& fn) {
  for (const auto& s : b.stmts) {
    fn(*s);
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, BlockStmt>) {
            walk(n, fn);
          } else if constexpr (std::is_same_v<T, ForallStmt> || std::is_same_v<T, FixedPointStmt>) {
            walk(*n.body, fn);
          } else if constexpr (std::is_same_v<T, IterateInBfsStmt>) {
            walk(*n.body, fn);
            if (n.reverse_body) walk(*n.reverse_body, fn);
          } else if constexpr (std::is_same_v<T, IfStmt>) {
            walk(*n.then_body, fn);
            if (n.else_body) walk(*n.else_body, fn);
          }
        },
        s->node);
  }
}

std::set<int> written_symbols(const TypedProgram& tp, const BlockStmt& body) {
  std::set<int> out;
  walk(body, [&](const Stmt& s) {
    if (auto* a = s.as<AssignStmt>()) out.insert(target_symbol(tp, *a->lvalue));
    if (auto* r = s.as<ReductionAssign>()) out.insert(target_symbol(tp, *r->lvalue));
    if (auto* m = s.as<MinMaxAssign>())
      for (const auto& t : m->targets) out.insert(target_symbol(tp, *t));
    if (auto* x = s.as<ExprStmt>())
      for (int sym : tp.exprs[x->expr->id].attach_symbols) out.insert(sym);
  });
  out.erase(-1);
  return out;
}

/// The attach call in `s` setting `sym`, returning the value expression.
const Expr* attach_value(const TypedProgram& tp, const Stmt& s, int sym) {
  auto* x = s.as<ExprStmt>();
  if (!x) return nullptr;
  auto* call = x->expr->as<ProcCallExpr>();
  if (!call) return nullptr;
  const auto& syms = tp.exprs[x->expr->id].attach_symbols;
  for (std::size_t i = 0; i < syms.size(); ++i)
    if (syms[i] == sym) return call->args[i].value.get();
  return nullptr;
}

class FixedPointAnalyzer {
 public:
  explicit FixedPointAnalyzer(TypedProgram& tp) : tp_(tp) {}

  void run() {
    for (auto& fn : tp_.program.functions) scan(fn.body);
  }

 private:
  void scan(const BlockStmt& b) {
    for (std::size_t i = 0; i < b.stmts.size(); ++i) {
      const Stmt& s = *b.stmts[i];
      if (auto* fp = s.as<FixedPointStmt>()) analyze(s, *fp, b, i);
      std::visit(
          [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, BlockStmt>) {
              scan(n);
            } else if constexpr (std::is_same_v<T, ForallStmt> || std::is_same_v<T, FixedPointStmt>) {
              scan(*n.body);
            } else if constexpr (std::is_same_v<T, IfStmt>) {
              scan(*n.then_body);
              if (n.else_body) scan(*n.else_body);
            }
          },
          s.node);
    }
  }

  void analyze(const Stmt& s, const FixedPointStmt& n, const BlockStmt& parent, std::size_t index) {
    FixedPointInfo& info = tp_.fixed_points.at(s.id);
    std::set<int> reads;
    collect_reads(tp_, *n.convergence, reads);
    info.linked.assign(reads.begin(), reads.end());
    const std::set<int> writes = written_symbols(tp_, *n.body);
    bool linked = false;
    for (int r : reads) linked = linked || writes.count(r);
    if (!linked)
      throw SemaError("fixedPoint body never writes anything its convergence expression '" +
                          pretty_print(*n.convergence) + "' reads; the loop cannot terminate",
                      s.span.begin);

    // Drivers: bool properties read by the convergence expression, closed
    // over whole-property copies into them.
    std::set<int> drivers;
    for (int r : reads)
      if (tp_.symbols[r].type.is(DslType::Kind::PropNode)) drivers.insert(r);
    for (bool grew = true; grew;) {
      grew = false;
      walk(*n.body, [&](const Stmt& st) {
        auto* a = st.as<AssignStmt>();
        if (!a || !tp_.stmts[st.id].whole_copy) return;
        if (drivers.count(target_symbol(tp_, *a->lvalue))) {
          int src = tp_.exprs[a->value->id].symbol;
          grew = drivers.insert(src).second || grew;
        }
      });
    }
    info.drivers.assign(drivers.begin(), drivers.end());
    info.fused = false;
    info.fused_writes.clear();

    int staged = fusable(n, parent, index);
    if (staged < 0) return;
    info.fused = true;
    walk(*n.body, [&](const Stmt& st) {
      bool hit = false;
      if (auto* a = st.as<AssignStmt>()) {
        hit = !tp_.stmts[st.id].whole_copy && target_symbol(tp_, *a->lvalue) == staged;
      } else if (auto* m = st.as<MinMaxAssign>()) {
        for (const auto& t : m->targets) hit = hit || target_symbol(tp_, *t) == staged;
      }
      if (hit) {
        tp_.stmts[st.id].sets_convergence_flag = true;
        tp_.stmts[st.id].fixed_point = s.id;
        info.fused_writes.push_back(st.id);
      }
    });
  }

  // Returns the staging property Q when the loop has the shape
  //   attach(Q = False) ... fixedPoint until (f: !P) { ...Q writes of True...;
  //   P = Q; attach(Q = False); }
  // so "some vertex wrote True into Q this round" is exactly "any P".
  int fusable(const FixedPointStmt& n, const BlockStmt& parent, std::size_t index) {
    auto* un = n.convergence->as<UnaryExpr>();
    if (!un || un->op != UnaryOp::Not) return -1;
    const auto& pinfo = tp_.exprs[un->operand->id];
    if (!un->operand->as<Identifier>() || !pinfo.property_any) return -1;
    const int p = pinfo.symbol;

    const auto& stmts = n.body->stmts;
    int q = -1;
    std::size_t copy_at = stmts.size();
    for (std::size_t i = 0; i < stmts.size(); ++i) {
      auto* a = stmts[i]->as<AssignStmt>();
      if (a && tp_.stmts[stmts[i]->id].whole_copy && target_symbol(tp_, *a->lvalue) == p) {
        q = tp_.exprs[a->value->id].symbol;
        copy_at = i;
        break;
      }
    }
    if (q < 0 || q == p) return -1;
    bool reset = false;
    for (std::size_t i = copy_at + 1; i < stmts.size(); ++i) {
      const Expr* v = attach_value(tp_, *stmts[i], q);
      if (v) reset = is_false_literal(*v);
    }
    if (!reset) return -1;

    // Q must hold all-False on entry: the last write to Q before the loop in
    // the enclosing block is an attach to False.
    bool clean_entry = false;
    for (std::size_t i = index; i-- > 0;) {
      const Stmt& st = *parent.stmts[i];
      if (const Expr* v = attach_value(tp_, st, q)) {
        clean_entry = is_false_literal(*v);
        break;
      }
      if (written_symbols_stmt(st).count(q)) break;
    }
    if (!clean_entry) return -1;

    // Every element write to the staging property inside the body stores True,
    // and the negated property itself is only written by the copy.
    bool ok = true;
    walk(*n.body, [&](const Stmt& st) {
      if (auto* a = st.as<AssignStmt>()) {
        int t = target_symbol(tp_, *a->lvalue);
        if (tp_.stmts[st.id].whole_copy) {
          if (t == q) ok = false;
          return;
        }
        if (t == p) ok = false;
        if (t == q && !is_true_literal(*a->value)) ok = false;
      } else if (auto* m = st.as<MinMaxAssign>()) {
        for (std::size_t i = 0; i < m->targets.size(); ++i) {
          int t = target_symbol(tp_, *m->targets[i]);
          if (t == p) ok = false;
          if (t == q && (i == 0 || !is_true_literal(*m->companions[i - 1]))) ok = false;
        }
      }
    });
    return ok ? q : -1;
  }

  std::set<int> written_symbols_stmt(const Stmt& st) {
    std::set<int> out;
    if (auto* a = st.as<AssignStmt>()) out.insert(target_symbol(tp_, *a->lvalue));
    if (auto* r = st.as<ReductionAssign>()) out.insert(target_symbol(tp_, *r->lvalue));
    if (auto* m = st.as<MinMaxAssign>())
      for (const auto& t : m->targets) out.insert(target_symbol(tp_, *t));
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, ForallStmt> || std::is_same_v<T, FixedPointStmt>) {
            auto w = written_symbols(tp_, *n.body);
            out.insert(w.begin(), w.end());
          } else if constexpr (std::is_same_v<T, IfStmt>) {
            auto w = written_symbols(tp_, *n.then_body);
            out.insert(w.begin(), w.end());
            if (n.else_body) {
              w = written_symbols(tp_, *n.else_body);
              out.insert(w.begin(), w.end());
            }
          } else if constexpr (std::is_same_v<T, IterateInBfsStmt>) {
            auto w = written_symbols(tp_, *n.body);
            out.insert(w.begin(), w.end());
          }
        },
        st.node);
    return out;
  }

  TypedProgram& tp_;
};

}  // namespace

TypedProgram typecheck(ast::Program program) {
  TypedProgram tp;
  tp.program = std::move(program);
  Checker(tp).run();
  return tp;
}

TypedProgram& analyze_fixedpoint(TypedProgram& tp) {
  FixedPointAnalyzer(tp).run();
  tp.fixed_points_analyzed = true;
  return tp;
}

TransferPlan analyze_transfers(const TypedProgram& tp, int function) {
  TransferPlan plan;
  if (function < 0 || function >= static_cast<int>(tp.functions.size())) return plan;
  const FunctionInfo& fi = tp.functions[function];
  if (fi.regions.empty()) return plan;

  std::map<int, TransferDirection> dir;
  if (fi.graph_param >= 0) dir[fi.graph_param] = TransferDirection::HostToDeviceOnce;

  std::set<int> fused_drivers;
  std::set<int> fused_flags;
  for (NodeId id : fi.fixed_points) {
    const auto& fp = tp.fixed_points.at(id);
    if (!fp.fused) continue;
    fused_drivers.insert(fp.drivers.begin(), fp.drivers.end());
    fused_flags.insert(fp.flag);
  }

  // Properties: everything attached or touched by a kernel lives on the
  // device; results come back at the end unless only used for convergence.
  for (const auto& sym : tp.symbols) {
    if (sym.function != function || sym.storage != StorageClass::Property) continue;
    bool used = false;
    for (NodeId r : fi.regions) {
      const auto& ri = tp.regions.at(r);
      used = used || ri.reads.count(sym.index) || ri.writes.count(sym.index);
    }
    for (const auto& e : tp.exprs)
      for (int a : e.attach_symbols) used = used || a == sym.index;
    if (!used) continue;
    dir[sym.index] = fused_drivers.count(sym.index) ? TransferDirection::DeviceOnly
                                                    : TransferDirection::DeviceToHostAtEnd;
  }

  for (const auto& sym : tp.symbols) {
    if (sym.function != function || sym.storage == StorageClass::Property) continue;
    if (sym.type.is(DslType::Kind::Graph)) continue;
    if (sym.storage == StorageClass::ForallLocal && sym.region >= 0) {
      if (!sym.is_iterator && sym.region >= 0) dir[sym.index] = TransferDirection::DeviceOnly;
      continue;
    }
    bool read = false;
    bool written = false;
    for (NodeId r : fi.regions) {
      const auto& ri = tp.regions.at(r);
      read = read || ri.reads.count(sym.index);
      written = written || ri.writes.count(sym.index);
    }
    if (fused_flags.count(sym.index)) {
      dir[sym.index] = TransferDirection::RoundTripPerIteration;
    } else if (written) {
      bool host_reads_in_loop = false;
      for (const auto& [loop, reads] : tp.host_loop_reads)
        host_reads_in_loop = host_reads_in_loop || reads.count(sym.index);
      dir[sym.index] = host_reads_in_loop ? TransferDirection::RoundTripPerIteration
                                          : TransferDirection::DeviceToHostAtEnd;
    } else if (read) {
      dir[sym.index] = TransferDirection::HostToDeviceOnce;
    }
  }

  for (const auto& [sym, d] : dir) plan.entries.push_back({sym, tp.symbols[sym].name, d});
  return plan;
}

TypedProgram analyze_source(std::string_view source) {
  TypedProgram tp = typecheck(parse_source(source));
  analyze_fixedpoint(tp);
  return tp;
}

}  // namespace starplat
