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

#include "starplat/codegen.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>

#include "embedded.hpp"

namespace starplat {

using namespace ast;

std::string_view to_string(Target t) {
  switch (t) {
    case Target::Seq: return "seq";
    case Target::Omp: return "omp";
    case Target::Mpi: return "mpi";
    case Target::Cuda: return "cuda";
  }
  return "?";
}

std::optional<Target> parse_target(std::string_view name) {
  for (Target t : {Target::Seq, Target::Omp, Target::Mpi, Target::Cuda})
    if (name == to_string(t)) return t;
  return std::nullopt;
}

std::string_view runtime_header() { return detail::embedded_text("runtime.h"); }

namespace {

std::string cpp_type(Primitive p) {
  switch (p) {
    case Primitive::Int: return "int";
    case Primitive::Bool: return "bool";
    case Primitive::Long: return "std::int64_t";
    case Primitive::Float: return "float";
    case Primitive::Double: return "double";
  }
  return "int";
}

std::string cpp_type(const DslType& t, const Span& where) {
  if (t.is(DslType::Kind::Primitive)) return cpp_type(t.prim);
  if (t.is(DslType::Kind::Node) || t.is(DslType::Kind::Edge)) return "int";
  throw EmitError("values of type " + to_string(t) + " have no translation", where.begin);
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// Visits `s` and every statement nested in it.
void walk(const Stmt& s, const std::function<void(const Stmt&)>& fn) {
  fn(s);
  auto block = [&](const BlockStmt* b) {
    if (b)
      for (const auto& c : b->stmts) walk(*c, fn);
  };
  if (auto* n = s.as<BlockStmt>()) block(n);
  if (auto* n = s.as<ForallStmt>()) block(n->body.get());
  if (auto* n = s.as<FixedPointStmt>()) block(n->body.get());
  if (auto* n = s.as<IterateInBfsStmt>()) {
    block(n->body.get());
    block(n->reverse_body.get());
  }
  if (auto* n = s.as<IfStmt>()) {
    block(n->then_body.get());
    block(n->else_body.get());
  }
}

void walk_block(const BlockStmt& b, const std::function<void(const Stmt&)>& fn) {
  for (const auto& s : b.stmts) walk(*s, fn);
}

void walk_expr(const Expr& e, const std::function<void(const Expr&)>& fn) {
  fn(e);
  if (auto* n = e.as<MemberAccess>()) walk_expr(*n->object, fn);
  if (auto* n = e.as<UnaryExpr>()) walk_expr(*n->operand, fn);
  if (auto* n = e.as<BinaryExpr>()) {
    walk_expr(*n->lhs, fn);
    walk_expr(*n->rhs, fn);
  }
  if (auto* n = e.as<ProcCallExpr>()) {
    if (n->receiver) walk_expr(*n->receiver, fn);
    for (const auto& a : n->args) walk_expr(*a.value, fn);
  }
}

// Expressions held directly by `s` (not by nested statements).
void stmt_exprs(const Stmt& s, const std::function<void(const Expr&)>& fn) {
  auto visit = [&](const ExprPtr& e) {
    if (e) walk_expr(*e, fn);
  };
  if (auto* n = s.as<DeclStmt>()) visit(n->init);
  if (auto* n = s.as<AssignStmt>()) {
    visit(n->lvalue);
    visit(n->value);
  }
  if (auto* n = s.as<ReductionAssign>()) {
    visit(n->lvalue);
    visit(n->value);
  }
  if (auto* n = s.as<MinMaxAssign>()) {
    for (const auto& t : n->targets) visit(t);
    visit(n->current);
    visit(n->candidate);
    for (const auto& c : n->companions) visit(c);
  }
  if (auto* n = s.as<ForallStmt>()) {
    visit(n->range);
    visit(n->filter);
  }
  if (auto* n = s.as<FixedPointStmt>()) visit(n->convergence);
  if (auto* n = s.as<IterateInBfsStmt>()) {
    visit(n->range);
    visit(n->root);
  }
  if (auto* n = s.as<IfStmt>()) visit(n->condition);
  if (auto* n = s.as<ReturnStmt>()) visit(n->value);
  if (auto* n = s.as<ExprStmt>()) visit(n->expr);
}

std::string_view omp_reduction_op(ReduceOp op) {
  switch (op) {
    case ReduceOp::Sum:
    case ReduceOp::Count: return "+";
    case ReduceOp::Product: return "*";
    case ReduceOp::All: return "&&";
    case ReduceOp::Any: return "||";
  }
  return "+";
}

std::string_view cpp_op(BinaryOp op) {
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

struct LoopCtx {
  int iterator = -1;
  std::string source;
  GraphMethod method = GraphMethod::None;
  std::string edge;
};

struct KernelParam {
  std::string decl;
  std::string arg;
};

class Emitter {
 public:
  Emitter(const TypedProgram& tp, EmitOptions options, const TransferPlan* plan)
      : tp_(tp), opt_(std::move(options)), plan_override_(plan) {}

  EmittedUnit run() {
    if (tp_.program.functions.empty()) throw EmitError("program defines no function");
    main_fn_ = 0;
    if (!opt_.function.empty()) {
      main_fn_ = tp_.function_index(opt_.function);
      if (main_fn_ < 0) throw EmitError("no function named '" + opt_.function + "'");
    }
    const Function& mf = tp_.program.functions[main_fn_];
    const std::string stem = (opt_.name.empty() ? lower(mf.name) : opt_.name) + "_" +
                             std::string(to_string(opt_.target));
    EmittedUnit unit;
    unit.file_name = stem + (cuda() ? ".cu" : ".cc");
    switch (opt_.target) {
      case Target::Seq: unit.build_hints = "g++ -std=c++20 -O2 " + unit.file_name + " -o " + stem; break;
      case Target::Omp:
        unit.build_hints = "g++ -std=c++20 -O2 -fopenmp " + unit.file_name + " -o " + stem;
        break;
      case Target::Mpi: unit.build_hints = "mpicxx -std=c++20 -O2 " + unit.file_name + " -o " + stem; break;
      case Target::Cuda:
        unit.build_hints = "nvcc -std=c++20 -O2 -arch=sm_70 " + unit.file_name + " -o " + stem;
        break;
    }

    for (std::size_t f = 0; f < tp_.program.functions.size(); ++f) function(static_cast<int>(f));
    main_function();

    std::string src;
    src += "// Generated by starplatc from " + mf.name + " (target: " + std::string(to_string(opt_.target)) +
           ").\n";
    src += "// Build: " + unit.build_hints + "\n";
    if (mpi()) src += "#define SP_RT_MPI\n";
    src += "#include \"runtime.h\"\n\n";
    if (cuda()) src += "constexpr unsigned sp__threads = 1024;\n\n";
    src += kernels_;
    src += functions_;
    src += main_;
    unit.source = std::move(src);
    unit.header = std::string(runtime_header());
    return unit;
  }

 private:
  // -------------------------------------------------------------- output

  bool cuda() const { return opt_.target == Target::Cuda; }
  bool mpi() const { return opt_.target == Target::Mpi; }
  bool omp() const { return opt_.target == Target::Omp; }
  bool in_region() const { return region_ >= 0; }

  void line(const std::string& s) {
    out_->append(static_cast<std::size_t>(indent_) * 2, ' ');
    *out_ += s;
    *out_ += '\n';
  }
  void open(const std::string& head) {
    line(head.empty() ? "{" : head + " {");
    ++indent_;
  }
  void close(const std::string& tail = "") {
    --indent_;
    line("}" + tail);
  }
  std::string fresh(const std::string& stem) { return "sp__" + stem + std::to_string(++counter_); }

  const Symbol& sym(int i) const { return tp_.symbols.at(i); }
  const std::string& graph() const {
    if (graph_.empty()) throw EmitError("function has no Graph parameter");
    return graph_;
  }
  std::string size_of(const DslType& t) const {
    return graph() + (t.is(DslType::Kind::PropEdge) ? ".num_edges()" : ".num_nodes()");
  }
  TransferDirection direction(int symbol) const {
    for (const auto& e : plan_.entries)
      if (e.symbol == symbol) return e.direction;
    return TransferDirection::RoundTripPerIteration;
  }

  // --------------------------------------------------------- expressions

  std::string scalar(int s) const {
    auto it = rename_.find(s);
    return it != rename_.end() ? it->second : sym(s).name;
  }

  std::string device_name(int s) const { return "d_" + sym(s).name; }

  std::string elem(int s, const std::string& index) const {
    if (cuda()) {
      if (kernel_) return device_name(s) + "[" + index + "]";
      return "sp__rt::load_device(" + device_name(s) + " + " + index + ")";
    }
    return sym(s).name + "[" + index + "]";
  }

  std::string ex(const Expr& e, int min_binding = 0) {
    auto [text, binding] = raw(e);
    return binding < min_binding ? "(" + text + ")" : text;
  }

  std::pair<std::string, int> raw(const Expr& e) {
    const ExprInfo& info = tp_.info(e);
    if (e.as<Identifier>()) {
      if (info.implicit_iterator >= 0) return {elem(info.symbol, scalar(info.implicit_iterator)), 7};
      if (info.property_any) return {any_true(info.symbol), 7};
      return {scalar(info.symbol), 7};
    }
    if (auto* n = e.as<Literal>()) {
      switch (n->kind) {
        case Literal::Kind::Bool: return {n->text == "True" ? "true" : "false", 7};
        case Literal::Kind::IntMax: return {"INT_MAX", 7};
        default: return {n->text, 7};
      }
    }
    if (auto* n = e.as<MemberAccess>()) {
      const std::string obj = ex(*n->object, 7);
      if (info.symbol < 0) return {graph() + ".weights[" + obj + "]", 7};
      return {elem(info.symbol, obj), 7};
    }
    if (auto* n = e.as<UnaryExpr>()) {
      std::string inner = ex(*n->operand, 6);
      if (n->op == UnaryOp::Neg && !inner.empty() && inner[0] == '-') inner = "(" + inner + ")";
      return {(n->op == UnaryOp::Not ? "!" : "-") + inner, 6};
    }
    if (auto* n = e.as<BinaryExpr>()) {
      const int p = precedence(n->op);
      int lmin = p;
      int rmin = p + 1;
      if (p == 3) lmin = rmin = 4;
      if (n->op == BinaryOp::Or) {
        const auto* lb = n->lhs->as<BinaryExpr>();
        lmin = lb && lb->op == BinaryOp::Or ? 1 : 3;
        rmin = 3;
      }
      if (n->op == BinaryOp::And) rmin = 3;
      return {ex(*n->lhs, lmin) + " " + std::string(cpp_op(n->op)) + " " + ex(*n->rhs, rmin), p};
    }
    return {call(e, *e.as<ProcCallExpr>()), 7};
  }

  std::string any_true(int prop) {
    if (cuda()) return "sp__rt::device_any(" + device_name(prop) + ", " + graph() + ".num_nodes())";
    if (mpi())
      return "sp__rt::allreduce<bool>(sp__rt::any_true(" + sym(prop).name +
             ", g.local_begin, g.local_end), MPI_LOR)";
    return "sp__rt::any_true(" + sym(prop).name + ")";
  }

  std::string call(const Expr& e, const ProcCallExpr& c) {
    const ExprInfo& info = tp_.info(e);
    const std::string recv = c.receiver ? ex(*c.receiver, 7) : "";
    auto arg = [&](std::size_t i) { return ex(*c.args.at(i).value); };
    switch (info.method) {
      case GraphMethod::NumNodes: return recv + ".num_nodes()";
      case GraphMethod::NumEdges: return recv + ".num_edges()";
      case GraphMethod::CountOutNbrs: return recv + ".count_out_nbrs(" + arg(0) + ")";
      case GraphMethod::MinWt:
      case GraphMethod::MaxWt:
        if (kernel_) throw EmitError(c.method + " is not available inside a kernel", e.span.begin);
        return recv + (info.method == GraphMethod::MinWt ? ".min_wt()" : ".max_wt()");
      case GraphMethod::IsAnEdge: return recv + ".is_an_edge(" + arg(0) + ", " + arg(1) + ")";
      case GraphMethod::GetEdge: {
        const std::string a = arg(0);
        const std::string b = arg(1);
        for (auto ctx = loops_.rbegin(); ctx != loops_.rend(); ++ctx) {
          if (ctx->edge.empty()) continue;
          const std::string cur = scalar(ctx->iterator);
          const bool forward = ctx->method != GraphMethod::NodesTo && a == ctx->source && b == cur;
          const bool backward = ctx->method == GraphMethod::NodesTo && a == cur && b == ctx->source;
          if (forward || backward) return ctx->edge;
        }
        return recv + ".get_edge(" + a + ", " + b + ")";
      }
      default: break;
    }
    throw EmitError(c.method + " has no translation as a value", e.span.begin);
  }

  bool uses_get_edge(const BlockStmt& b, const Expr* filter) {
    bool found = false;
    auto check = [&](const Expr& x) {
      if (tp_.info(x).method == GraphMethod::GetEdge) found = true;
    };
    if (filter) walk_expr(*filter, check);
    walk_block(b, [&](const Stmt& s) { stmt_exprs(s, check); });
    return found;
  }

  // ----------------------------------------------------------- functions

  void function(int f) {
    fn_ = f;
    const Function& fn = tp_.program.functions[f];
    const FunctionInfo& fi = tp_.functions[f];
    plan_ = cuda() ? (f == main_fn_ && plan_override_ ? *plan_override_ : analyze_transfers(tp_, f))
                   : TransferPlan{};
    graph_ = fi.graph_param >= 0 ? sym(fi.graph_param).name : "";
    declared_.clear();
    rename_.clear();
    kernel_written_.clear();
    if (cuda()) find_kernel_written(fn.body);

    out_ = &functions_;
    indent_ = 0;
    std::vector<std::string> params;
    for (int p : fi.params) {
      const Symbol& s = sym(p);
      if (s.type.is(DslType::Kind::Graph)) {
        params.push_back(std::string(mpi() ? "const sp__rt::DistGraph& " : "const sp__rt::Graph& ") + s.name);
      } else if (s.type.is(DslType::Kind::SetN)) {
        params.push_back("const std::vector<int>& " + s.name);
      } else {
        params.push_back(cpp_type(s.type, s.span) + " " + s.name);
      }
    }
    params.push_back("sp__rt::Output& sp__out");
    const std::string ret = fi.returns_value ? cpp_type(fi.return_type, fn.span) : "void";
    std::string head = ret + " " + fn.name + "(";
    for (std::size_t i = 0; i < params.size(); ++i) head += (i ? ", " : "") + params[i];
    open(head + ")");
    if (cuda() && !graph_.empty()) {
      line("const sp__rt::DeviceGraph sp__dg = sp__rt::to_device(" + graph_ + ");");
      line("const unsigned sp__blocks = std::max(1u, (" + graph_ +
           ".num_nodes() + sp__threads - 1) / sp__threads);");
    }
    for (int p : fi.params) {
      declared_.insert(p);
      device_scalar(p);
    }
    for (const auto& s : fn.body.stmts) stmt(*s);
    if (fn.body.stmts.empty() || !fn.body.stmts.back()->as<ReturnStmt>()) record_outputs();
    close();
    functions_ += "\n";
  }

  // Scalars a CUDA kernel writes get a device copy next to the host one.
  void find_kernel_written(const BlockStmt& body) {
    for (const auto& [rid, ri] : tp_.regions) {
      if (ri.function != fn_) continue;
      for (int w : ri.writes)
        if (sym(w).storage != StorageClass::Property && sym(w).region < 0) kernel_written_.insert(w);
    }
    walk_block(body, [&](const Stmt& s) {
      const StmtInfo& info = tp_.info(s);
      if (info.sets_convergence_flag && info.region >= 0)
        kernel_written_.insert(tp_.fixed_points.at(info.fixed_point).flag);
    });
  }

  void device_scalar(int s) {
    if (!cuda() || kernel_ || !kernel_written_.count(s)) return;
    const std::string t = cpp_type(sym(s).type, sym(s).span);
    line(t + "* " + device_name(s) + " = sp__rt::device_alloc<" + t + ">(1);");
    if (direction(s) == TransferDirection::DeviceToHostAtEnd)
      line("sp__rt::store_device(" + device_name(s) + ", " + sym(s).name + ");");
  }

  void record_outputs() {
    const FunctionInfo& fi = tp_.functions[fn_];
    for (int idx : fi.top_level) {
      if (!declared_.count(idx)) continue;
      const Symbol& s = sym(idx);
      const bool node = s.type.is(DslType::Kind::PropNode);
      if (node || s.type.is(DslType::Kind::PropEdge)) {
        const std::string t = cpp_type(s.type.prim);
        std::string values = s.name;
        if (cuda()) {
          if (direction(idx) != TransferDirection::DeviceToHostAtEnd) continue;
          values = "sp__rt::download(" + device_name(idx) + ", " + size_of(s.type) + ")";
        } else if (mpi()) {
          line(std::string(node ? "sp__rt::refresh(g, " : "sp__rt::refresh_edges(g, ") + s.name + ");");
        }
        line(std::string("sp__out.") + (node ? "node" : "edge") + "<" + t + ">(\"" + s.name + "\", " +
             values + ");");
        continue;
      }
      if (!s.type.is(DslType::Kind::Primitive) && !s.type.is(DslType::Kind::Node) &&
          !s.type.is(DslType::Kind::Edge))
        continue;
      if (cuda() && kernel_written_.count(idx) && direction(idx) == TransferDirection::DeviceToHostAtEnd)
        line(s.name + " = sp__rt::load_device(" + device_name(idx) + ");");
      line("sp__out.scalar<" + cpp_type(s.type, s.span) + ">(\"" + s.name + "\", " + s.name + ");");
    }
  }

  void main_function() {
    const Function& fn = tp_.program.functions[main_fn_];
    const FunctionInfo& fi = tp_.functions[main_fn_];
    out_ = &main_;
    indent_ = 0;
    open("int main(int argc, char** argv)");
    if (mpi()) line("MPI_Init(&argc, &argv);");
    line("const sp__rt::Args sp__args(argc, argv);");
    std::vector<std::string> args;
    for (int p : fi.params) {
      const Symbol& s = sym(p);
      args.push_back(s.name);
      if (s.type.is(DslType::Kind::Graph)) {
        if (mpi())
          line("const sp__rt::DistGraph " + s.name +
               " = sp__rt::distribute(sp__rt::load_graph(sp__args.graph(), sp__args.directed()));");
        else
          line("const sp__rt::Graph " + s.name + " = sp__rt::load_graph(sp__args.graph(), sp__args.directed());");
      } else if (s.type.is(DslType::Kind::SetN)) {
        line("const std::vector<int> " + s.name + " = sp__args.get_set(\"" + s.name + "\", " + graph_of(fi) + ");");
      } else if (s.type.is(DslType::Kind::Node)) {
        line("const int " + s.name + " = sp__args.get_node(\"" + s.name + "\", " + graph_of(fi) + ");");
      } else {
        const std::string t = cpp_type(s.type, s.span);
        line("const " + t + " " + s.name + " = sp__args.get<" + t + ">(\"" + s.name + "\");");
      }
    }
    args.push_back("sp__out");
    line("sp__rt::Output sp__out;");
    if (opt_.timing) line("const sp__rt::Timer sp__timer;");
    std::string call = fn.name + "(";
    for (std::size_t i = 0; i < args.size(); ++i) call += (i ? ", " : "") + args[i];
    line(call + ");");
    if (mpi()) {
      const std::string g = graph_of(fi);
      open("if (" + g + ".rank == 0)");
      if (opt_.timing) line("sp__timer.report(\"" + fn.name + "\");");
      line("sp__out.print();");
      close();
      line("MPI_Finalize();");
    } else {
      if (opt_.timing) line("sp__timer.report(\"" + fn.name + "\");");
      line("sp__out.print();");
    }
    line("return 0;");
    close();
  }

  std::string graph_of(const FunctionInfo& fi) const {
    if (fi.graph_param < 0) throw EmitError("node and set parameters need a Graph parameter");
    return sym(fi.graph_param).name;
  }

  // ---------------------------------------------------------- statements

  void block(const BlockStmt& b) {
    for (const auto& s : b.stmts) stmt(*s);
  }

  void stmt(const Stmt& s) {
    if (auto* n = s.as<BlockStmt>()) {
      open("");
      block(*n);
      close();
    } else if (auto* n = s.as<DeclStmt>()) {
      decl(s, *n);
    } else if (auto* n = s.as<AssignStmt>()) {
      assign(s, *n);
    } else if (auto* n = s.as<ReductionAssign>()) {
      reduction(s, *n);
    } else if (auto* n = s.as<MinMaxAssign>()) {
      minmax(s, *n);
    } else if (auto* n = s.as<ForallStmt>()) {
      if (tp_.info(s).parallel)
        parallel_forall(s, *n);
      else
        loop(s, *n, "", false);
    } else if (auto* n = s.as<FixedPointStmt>()) {
      fixed_point(s, *n);
    } else if (auto* n = s.as<IterateInBfsStmt>()) {
      if (cuda())
        bfs_cuda(s, *n);
      else
        bfs_host(s, *n);
    } else if (auto* n = s.as<IfStmt>()) {
      if_stmt(*n, "if");
    } else if (auto* n = s.as<ReturnStmt>()) {
      if (n->value) {
        const FunctionInfo& fi = tp_.functions[fn_];
        const std::string r = fresh("ret");
        open("");
        line("const " + cpp_type(fi.return_type, s.span) + " " + r + " = " + ex(*n->value) + ";");
        record_outputs();
        line("sp__out.ret(" + r + ");");
        line("return " + r + ";");
        close();
      } else {
        record_outputs();
        line("return;");
      }
    } else if (auto* n = s.as<ExprStmt>()) {
      expr_stmt(*n);
    }
  }

  void if_stmt(const IfStmt& n, const std::string& keyword) {
    open(keyword + " (" + ex(*n.condition) + ")");
    block(*n.then_body);
    if (!n.else_body) {
      close();
      return;
    }
    if (n.else_is_if) {
      --indent_;
      const auto& inner = *n.else_body->stmts.front()->as<IfStmt>();
      *out_ += std::string(static_cast<std::size_t>(indent_) * 2, ' ') + "} ";
      const std::size_t mark = out_->size();
      ++indent_;
      // Re-open on the same line as the closing brace.
      std::string tmp;
      std::string* saved = out_;
      out_ = &tmp;
      const int saved_indent = indent_;
      indent_ = 0;
      if_stmt_body(inner, saved_indent - 1);
      out_ = saved;
      indent_ = saved_indent - 1;
      out_->insert(mark, tmp);
      return;
    }
    --indent_;
    line("} else {");
    ++indent_;
    block(*n.else_body);
    close();
  }

  // Emits `if (...) {...}` for an else-if chain whose first line continues
  // an already written `} `.
  void if_stmt_body(const IfStmt& n, int depth) {
    std::string head;
    std::string* saved = out_;
    out_ = &head;
    indent_ = 0;
    line("else if (" + ex(*n.condition) + ") {");
    out_ = saved;
    *out_ += head;
    indent_ = depth + 1;
    block(*n.then_body);
    if (!n.else_body) {
      indent_ = depth;
      line("}");
      return;
    }
    if (n.else_is_if) {
      indent_ = depth;
      *out_ += std::string(static_cast<std::size_t>(indent_) * 2, ' ') + "} ";
      if_stmt_body(*n.else_body->stmts.front()->as<IfStmt>(), depth);
      return;
    }
    indent_ = depth;
    line("} else {");
    ++indent_;
    block(*n.else_body);
    close();
  }

  void decl(const Stmt& s, const DeclStmt& n) {
    const int id = tp_.info(s).decl;
    const Symbol& symb = sym(id);
    if (n.type.is_property()) {
      const std::string t = cpp_type(n.type.prim);
      if (cuda())
        line(t + "* " + device_name(id) + " = sp__rt::device_alloc<" + t + ">(" + size_of(n.type) + ");");
      else
        line("sp__rt::Prop<" + t + "> " + symb.name + "(" + size_of(n.type) + ");");
    } else {
      const std::string t = cpp_type(n.type, s.span);
      line(t + " " + symb.name + (n.init ? " = " + ex(*n.init) : "{}") + ";");
      device_scalar(id);
    }
    declared_.insert(id);
  }

  void assign(const Stmt& s, const AssignStmt& n) {
    const StmtInfo& info = tp_.info(s);
    if (info.whole_copy) {
      const int dst = tp_.info(*n.lvalue).symbol;
      const int src = tp_.info(*n.value).symbol;
      if (cuda()) {
        line("SP_RT_CHECK(cudaMemcpy(" + device_name(dst) + ", " + device_name(src) + ", sizeof(" +
             cpp_type(sym(dst).type.prim) + ") * " + size_of(sym(dst).type) + ", cudaMemcpyDeviceToDevice));");
      } else {
        line(sym(dst).name + " = " + sym(src).name + ";");
      }
      return;
    }
    const std::string value = ex(*n.value);
    if (auto* m = n.lvalue->as<MemberAccess>()) {
      const int p = tp_.info(*n.lvalue).symbol;
      const std::string idx = ex(*m->object);
      const bool remote = info.remote_write && in_region();
      if (mpi() && remote) {
        mpi_send(s, idx, value, [&] { line(sym(p).name + "[" + idx + "] = " + value + ";"); });
      } else {
        store_elem(p, idx, value, remote);
      }
    } else {
      line(scalar(tp_.info(*n.lvalue).symbol) + " = " + value + ";");
    }
    if (info.sets_convergence_flag) clear_flag(info.fixed_point);
  }

  void store_elem(int p, const std::string& idx, const std::string& value, bool remote) {
    if (cuda() && !kernel_)
      line("sp__rt::store_device(" + device_name(p) + " + " + idx + ", " + value + ");");
    else if (omp() && remote)
      line("sp__rt::atomic_store(&" + elem(p, idx) + ", " + value + ");");
    else
      line(elem(p, idx) + " = " + value + ";");
  }

  void clear_flag(NodeId fp) {
    const int flag = tp_.fixed_points.at(fp).flag;
    if (omp() && in_region())
      line("sp__rt::atomic_store(&" + scalar(flag) + ", false);");
    else
      line(scalar(flag) + " = false;");
  }

  std::string plain_reduce(const std::string& target, ReduceOp op, const std::string& v,
                           const Expr* value) {
    switch (op) {
      case ReduceOp::Sum: return target + " += " + v + ";";
      case ReduceOp::Product: return target + " *= " + v + ";";
      case ReduceOp::Count: return "++" + target + ";";
      case ReduceOp::All: return target + " = " + target + " && " + (value ? ex(*value, 3) : v) + ";";
      case ReduceOp::Any: return target + " = " + target + " || " + (value ? ex(*value, 3) : v) + ";";
    }
    return "";
  }

  void reduction(const Stmt& s, const ReductionAssign& n) {
    const StmtInfo& info = tp_.info(s);
    const std::string v = n.value ? ex(*n.value) : "1";
    const int target = tp_.info(*n.lvalue).symbol;
    if (auto* m = n.lvalue->as<MemberAccess>()) {
      const std::string idx = ex(*m->object);
      const std::string e = elem(target, idx);
      const bool remote = info.remote_write && in_region();
      if (remote && omp()) {
        switch (n.op) {
          case ReduceOp::Sum:
          case ReduceOp::Count: line("sp__rt::atomic_add(&" + e + ", " + v + ");"); break;
          case ReduceOp::Product: line("sp__rt::atomic_mul(&" + e + ", " + v + ");"); break;
          case ReduceOp::All: line("if (!" + ex(*n.value, 6) + ") sp__rt::atomic_store(&" + e + ", false);"); break;
          case ReduceOp::Any: line("if (" + v + ") sp__rt::atomic_store(&" + e + ", true);"); break;
        }
      } else if (remote && kernel_) {
        if (n.op != ReduceOp::Sum && n.op != ReduceOp::Count)
          throw EmitError("only += and ++ onto another vertex's property have a CUDA translation", s.span.begin);
        line("sp__rt::atomic_add(&" + e + ", " + v + ");");
      } else if (remote && mpi()) {
        mpi_send(s, idx, v, [&] { line(plain_reduce(e, n.op, v, n.value.get())); });
      } else if (cuda() && !kernel_) {
        const std::string ptr = device_name(target) + " + " + idx;
        const std::string cur = "sp__rt::load_device(" + ptr + ")";
        std::string next;
        switch (n.op) {
          case ReduceOp::Sum: next = cur + " + " + ex(*n.value, 5); break;
          case ReduceOp::Count: next = cur + " + 1"; break;
          case ReduceOp::Product: next = cur + " * " + ex(*n.value, 6); break;
          case ReduceOp::All: next = cur + " && " + ex(*n.value, 3); break;
          case ReduceOp::Any: next = cur + " || " + ex(*n.value, 3); break;
        }
        line("sp__rt::store_device(" + ptr + ", " + next + ");");
      } else {
        line(plain_reduce(e, n.op, v, n.value.get()));
      }
      return;
    }
    if (kernel_ && info.target == TargetClass::SharedScalar) {
      const std::string ptr = device_name(target);
      switch (n.op) {
        case ReduceOp::Sum:
        case ReduceOp::Count: line("sp__rt::atomic_add(" + ptr + ", " + v + ");"); break;
        case ReduceOp::All: line("if (!" + ex(*n.value, 6) + ") *" + ptr + " = false;"); break;
        case ReduceOp::Any: line("if (" + v + ") *" + ptr + " = true;"); break;
        case ReduceOp::Product:
          throw EmitError("*= onto a shared scalar has no CUDA translation", s.span.begin);
      }
      return;
    }
    line(plain_reduce(scalar(target), n.op, v, n.value.get()));
  }

  void minmax(const Stmt& s, const MinMaxAssign& n) {
    const StmtInfo& info = tp_.info(s);
    const bool is_min = n.comparator == Comparator::Min;
    const std::string lt = is_min ? " < " : " > ";
    const int t0 = tp_.info(*n.targets[0]).symbol;
    const Primitive prim = sym(t0).type.is(DslType::Kind::Primitive) || sym(t0).type.is_property()
                               ? sym(t0).type.prim
                               : Primitive::Int;
    const std::string type = cpp_type(prim);
    const std::string c = fresh("c");
    line("const " + type + " " + c + " = " + ex(*n.candidate) + ";");

    auto companions = [&](bool atomic_stores) {
      for (std::size_t i = 0; i < n.companions.size(); ++i) {
        const Expr& t = *n.targets[i + 1];
        const std::string v = ex(*n.companions[i]);
        if (auto* m = t.as<MemberAccess>()) {
          const int p = tp_.info(t).symbol;
          const std::string idx = ex(*m->object);
          if (atomic_stores)
            line("sp__rt::atomic_store(&" + elem(p, idx) + ", " + v + ");");
          else
            store_elem(p, idx, v, false);
        } else {
          line(scalar(tp_.info(t).symbol) + " = " + v + ";");
        }
      }
      if (info.sets_convergence_flag) clear_flag(info.fixed_point);
    };

    auto* m0 = n.targets[0]->as<MemberAccess>();
    if (!m0) {
      const std::string x = scalar(t0);
      if (info.target == TargetClass::SharedScalar && in_region()) {
        if (omp()) {
          line(std::string("sp__rt::atomic_") + (is_min ? "min" : "max") + "(&" + x + ", " + c + ");");
          return;
        }
        if (kernel_) {
          line(device_atomic(is_min, prim, device_name(t0), c, s) + ";");
          return;
        }
      }
      open("if (" + c + lt + x + ")");
      line(x + " = " + c + ";");
      companions(false);
      close();
      return;
    }

    const std::string idx = ex(*m0->object);
    const std::string e = elem(t0, idx);
    const bool remote = info.remote_write && in_region();
    if (remote && omp()) {
      open(std::string("if (sp__rt::atomic_") + (is_min ? "min" : "max") + "(&" + e + ", " + c + "))");
      companions(true);
      close();
      return;
    }
    if (remote && kernel_) {
      open("if (" + device_atomic(is_min, prim, "&" + e, c, s) + (is_min ? " > " : " < ") + c + ")");
      companions(false);
      close();
      return;
    }
    if (remote && mpi()) {
      if (sym(t0).type.is(DslType::Kind::PropEdge))
        throw EmitError("Min/Max on another rank's edge has no MPI translation", s.span.begin);
      const std::string& box = boxes_.at(s.id);
      open("if (g.owns(" + idx + "))");
      open("if (" + c + lt + e + ")");
      line(e + " = " + c + ";");
      companions(false);
      close();
      close(" else if (" + c + lt + e + ") {");
      ++indent_;
      line(box + ".add(g.owner(" + idx + "), " + idx + ", " + c + ");");
      if (info.sets_convergence_flag) clear_flag(info.fixed_point);
      close();
      return;
    }
    if (cuda() && !kernel_) {
      open("if (" + c + lt + e + ")");
      store_elem(t0, idx, c, false);
      companions(false);
      close();
      return;
    }
    open("if (" + c + lt + e + ")");
    line(e + " = " + c + ";");
    companions(false);
    close();
  }

  std::string device_atomic(bool is_min, Primitive prim, const std::string& ptr, const std::string& v,
                            const Stmt& s) {
    switch (prim) {
      case Primitive::Int: return std::string(is_min ? "atomicMin(" : "atomicMax(") + ptr + ", " + v + ")";
      case Primitive::Long:
        return std::string(is_min ? "atomicMin(" : "atomicMax(") + "reinterpret_cast<long long*>(" + ptr +
               "), static_cast<long long>(" + v + "))";
      case Primitive::Double:
        return std::string(is_min ? "sp__rt::atomicMinDouble(" : "sp__rt::atomicMaxDouble(") + ptr + ", " + v +
               ")";
      default:
        throw EmitError("Min/Max on " + to_string(prim) + " has no CUDA translation", s.span.begin);
    }
  }

  void expr_stmt(const ExprStmt& n) {
    const ExprInfo& info = tp_.info(*n.expr);
    const bool node = info.method == GraphMethod::AttachNodeProperty;
    if (!node && info.method != GraphMethod::AttachEdgeProperty) {
      line("(void)" + ex(*n.expr, 7) + ";");
      return;
    }
    const auto& c = *n.expr->as<ProcCallExpr>();
    const std::string count = graph() + (node ? ".num_nodes()" : ".num_edges()");
    std::vector<std::pair<int, std::string>> values;
    for (std::size_t i = 0; i < info.attach_symbols.size(); ++i)
      values.emplace_back(info.attach_symbols[i], ex(*c.args[i].value));
    if (cuda()) {
      init_kernel(values, count);
      return;
    }
    std::vector<std::pair<int, std::string>> hoisted;
    for (auto& [p, v] : values) {
      const bool literal = std::all_of(v.begin(), v.end(), [](char ch) {
        return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '.' || ch == '-';
      });
      if (literal) continue;
      const std::string h = fresh("a");
      line("const " + cpp_type(sym(p).type.prim) + " " + h + " = " + v + ";");
      v = h;
    }
    const std::string i = fresh("v");
    open("for (int " + i + " = 0; " + i + " < " + count + "; ++" + i + ")");
    for (const auto& [p, v] : values) line(sym(p).name + "[" + i + "] = " + v + ";");
    close();
  }

  // --------------------------------------------------------------- loops

  // Emits a forall/for loop. `pragma` goes right above the loop header;
  // `local_only` restricts iteration to this rank's vertices (MPI).
  void loop(const Stmt& s, const ForallStmt& f, const std::string& pragma, bool local_only) {
    const int it = tp_.info(s).iterator;
    const std::string itn = sym(it).name;
    LoopCtx ctx;
    ctx.iterator = it;
    bool pushed = false;
    if (f.range->as<Identifier>()) {
      const std::string set = ex(*f.range);
      const std::string i = fresh("i");
      if (!pragma.empty()) line(pragma);
      open("for (std::size_t " + i + " = 0; " + i + " < " + set + ".size(); ++" + i + ")");
      line("const int " + itn + " = " + set + "[" + i + "];");
      if (local_only) line("if (!g.owns(" + itn + ")) continue;");
    } else {
      const auto& call = *f.range->as<ProcCallExpr>();
      const GraphMethod method = tp_.info(*f.range).method;
      const std::string g = ex(*call.receiver, 7);
      if (method == GraphMethod::Nodes) {
        if (!pragma.empty()) line(pragma);
        if (local_only)
          open("for (int " + itn + " = " + g + ".local_begin; " + itn + " < " + g + ".local_end; ++" + itn + ")");
        else
          open("for (int " + itn + " = 0; " + itn + " < " + g + ".num_nodes(); ++" + itn + ")");
      } else {
        const std::string src = ex(*call.args[0].value, 5);
        ctx.source = ex(*call.args[0].value);
        ctx.method = method;
        if (method == GraphMethod::NodesTo) {
          const std::string k = fresh("s");
          if (!pragma.empty()) line(pragma);
          open("for (int " + k + " = " + g + ".rev_offsets[" + src + "]; " + k + " < " + g + ".rev_offsets[" +
               src + " + 1]; ++" + k + ")");
          line("const int " + itn + " = " + g + ".rev_adj[" + k + "];");
          if (uses_get_edge(*f.body, f.filter.get())) {
            ctx.edge = fresh("e");
            line("const int " + ctx.edge + " = " + g + ".rev_eid[" + k + "];");
          }
          if (!bfs_level_.empty())
            line("if (" + bfs_level_ + "[" + itn + "] != " + bfs_level_ + "[" + src + "] - 1) continue;");
        } else {
          ctx.edge = fresh("e");
          if (!pragma.empty()) line(pragma);
          open("for (int " + ctx.edge + " = " + g + ".offsets[" + src + "]; " + ctx.edge + " < " + g +
               ".offsets[" + src + " + 1]; ++" + ctx.edge + ")");
          line("const int " + itn + " = " + g + ".adj[" + ctx.edge + "];");
          if (!bfs_level_.empty())
            line("if (" + bfs_level_ + "[" + itn + "] != " + bfs_level_ + "[" + src + "] + 1) continue;");
        }
        if (local_only) line("if (!g.owns(" + itn + ")) continue;");
        loops_.push_back(ctx);
        pushed = true;
      }
    }
    if (f.filter) line("if (!" + ex(*f.filter, 6) + ") continue;");
    block(*f.body);
    if (pushed) loops_.pop_back();
    close();
  }

  std::string omp_pragma(const RegionInfo& ri) const {
    std::string p = "#pragma omp parallel for";
    for (const auto& [s, op] : ri.reductions) p += " reduction(" + std::string(omp_reduction_op(op)) + ":" + sym(s).name + ")";
    p += opt_.schedule == Schedule::Dynamic ? " schedule(dynamic)" : " schedule(static)";
    return p;
  }

  void parallel_forall(const Stmt& s, const ForallStmt& f) {
    region_ = s.id;
    const RegionInfo& ri = tp_.regions.at(s.id);
    switch (opt_.target) {
      case Target::Seq: loop(s, f, "", false); break;
      case Target::Omp: loop(s, f, omp_pragma(ri), false); break;
      case Target::Mpi: {
        std::vector<std::string> renamed = mpi_region_begin(ri, *f.body);
        loop(s, f, "", true);
        mpi_region_end(ri, renamed);
        break;
      }
      case Target::Cuda: forall_kernel(s, f); break;
    }
    region_ = -1;
  }

  void fixed_point(const Stmt& s, const FixedPointStmt& fp) {
    const FixedPointInfo& info = tp_.fixed_points.at(s.id);
    const std::string flag = scalar(info.flag);
    open("while (!" + flag + ")");
    if (info.fused) {
      line(flag + " = true;");
      block(*fp.body);
      if (mpi()) line(flag + " = sp__rt::all_ranks(" + flag + ");");
    } else {
      block(*fp.body);
      line(flag + " = " + ex(*fp.convergence) + ";");
    }
    close();
  }

  // ----------------------------------------------------------------- BFS

  void bfs_host(const Stmt& s, const IterateInBfsStmt& b) {
    const int it = tp_.info(s).iterator;
    const std::string itn = sym(it).name;
    const std::string g = graph();
    const std::string root = fresh("root");
    const std::string level = fresh("level");
    const std::string levels = fresh("levels");
    const std::string d = fresh("d");
    const std::string next = fresh("next");
    open("");
    line("const int " + root + " = " + ex(*b.root) + ";");
    line("std::vector<int> " + level + "(" + g + ".num_nodes(), -1);");
    line("std::vector<std::vector<int>> " + levels + "{{" + root + "}};");
    line(level + "[" + root + "] = 0;");
    open("for (std::size_t " + d + " = 0; " + d + " < " + levels + ".size(); ++" + d + ")");
    line("std::vector<int> " + next + ";");
    const std::string frontier = levels + "[" + d + "]";
    const std::string u = fresh("u");
    const std::string e = fresh("e");
    const std::string w = fresh("w");
    const std::string depth = "static_cast<int>(" + d + ") + 1";
    if (omp()) {
      line("#pragma omp parallel");
      open("");
      const std::string local = fresh("local");
      line("std::vector<int> " + local + ";");
      line(std::string("#pragma omp for ") + (opt_.schedule == Schedule::Dynamic ? "schedule(dynamic)" : "schedule(static)") + " nowait");
      const std::string i = fresh("i");
      open("for (std::size_t " + i + " = 0; " + i + " < " + frontier + ".size(); ++" + i + ")");
      line("const int " + u + " = " + frontier + "[" + i + "];");
      open("for (int " + e + " = " + g + ".offsets[" + u + "]; " + e + " < " + g + ".offsets[" + u + " + 1]; ++" + e + ")");
      line("const int " + w + " = " + g + ".adj[" + e + "];");
      line("if (sp__rt::atomic_claim(&" + level + "[" + w + "], -1, " + depth + ")) " + local + ".push_back(" + w + ");");
      close();
      close();
      line("#pragma omp critical");
      line(next + ".insert(" + next + ".end(), " + local + ".begin(), " + local + ".end());");
      close();
    } else {
      open("for (const int " + u + " : " + frontier + ")");
      if (mpi()) line("if (!g.owns(" + u + ")) continue;");
      open("for (int " + e + " = " + g + ".offsets[" + u + "]; " + e + " < " + g + ".offsets[" + u + " + 1]; ++" + e + ")");
      line("const int " + w + " = " + g + ".adj[" + e + "];");
      if (mpi())
        line("if (" + level + "[" + w + "] < 0) " + level + "[" + w + "] = " + depth + ";");
      else
        open("if (" + level + "[" + w + "] < 0)");
      if (!mpi()) {
        line(level + "[" + w + "] = " + depth + ";");
        line(next + ".push_back(" + w + ");");
        close();
      }
      close();
      close();
    }
    if (mpi()) {
      line("sp__rt::merge_levels(g, " + level + ");");
      line("MPI_Barrier(MPI_COMM_WORLD);");
      const std::string x = fresh("x");
      open("for (int " + x + " = 0; " + x + " < " + g + ".num_nodes(); ++" + x + ")");
      line("if (" + level + "[" + x + "] == " + depth + ") " + next + ".push_back(" + x + ");");
      close();
    } else {
      line("std::sort(" + next + ".begin(), " + next + ".end());");
    }

    bfs_level_ = level;
    bfs_body(s.id, *b.body, it, frontier);
    bfs_level_.clear();
    line("if (!" + next + ".empty()) " + levels + ".push_back(std::move(" + next + "));");
    close();

    if (b.reverse_body) {
      const NodeId rev = tp_.reverse_region(s.id);
      const int rit = tp_.regions.at(rev).iterator;
      open("for (std::size_t " + d + " = " + levels + ".size(); " + d + "-- > 0;)");
      bfs_level_ = level;
      bfs_body(rev, *b.reverse_body, rit, frontier);
      bfs_level_.clear();
      if (mpi()) line("MPI_Barrier(MPI_COMM_WORLD);");
      close();
    }
    close();
  }

  void bfs_body(NodeId rid, const BlockStmt& body, int it, const std::string& frontier) {
    region_ = rid;
    const RegionInfo& ri = tp_.regions.at(rid);
    const std::string itn = sym(it).name;
    std::vector<std::string> renamed;
    if (mpi()) renamed = mpi_region_begin(ri, body);
    const std::string i = fresh("i");
    if (omp()) line(omp_pragma(ri));
    open("for (std::size_t " + i + " = 0; " + i + " < " + frontier + ".size(); ++" + i + ")");
    line("const int " + itn + " = " + frontier + "[" + i + "];");
    if (mpi()) line("if (!g.owns(" + itn + ")) continue;");
    block(body);
    close();
    if (mpi()) mpi_region_end(ri, renamed);
    region_ = -1;
  }

  // ----------------------------------------------------------------- MPI

  // Refreshes remote-read properties, opens private accumulators for shared
  // scalars and declares one outbox per remote-writing site.
  std::vector<std::string> mpi_region_begin(const RegionInfo& ri, const BlockStmt& body) {
    std::vector<std::string> props;
    for (int p : ri.remote_reads)
      if (sym(p).type.is(DslType::Kind::PropNode)) props.push_back(sym(p).name);
    if (!props.empty()) {
      open("if (g.nranks > 1)");
      for (const auto& p : props) line("sp__rt::refresh(g, " + p + ");");
      close();
    }
    std::vector<std::string> renamed;
    for (const auto& [s, op] : ri.reductions) {
      const std::string acc = fresh("acc");
      const std::string t = cpp_type(sym(s).type, sym(s).span);
      std::string identity = t + "{}";
      if (op == ReduceOp::Product) identity = "static_cast<" + t + ">(1)";
      if (op == ReduceOp::All) identity = "true";
      if (op == ReduceOp::Any) identity = "false";
      line(t + " " + acc + " = " + identity + ";");
      rename_[s] = acc;
    }
    for (const auto& [s, c] : ri.minmax_scalars) {
      const std::string mm = fresh("mm");
      line(cpp_type(sym(s).type, sym(s).span) + " " + mm + " = " + sym(s).name + ";");
      rename_[s] = mm;
    }
    walk_block(body, [&](const Stmt& st) {
      const StmtInfo& info = tp_.info(st);
      if (!info.remote_write) return;
      const Expr* target = nullptr;
      std::string op;
      if (auto* n = st.as<MinMaxAssign>()) {
        target = n->targets[0].get();
        op = n->comparator == Comparator::Min ? "Min" : "Max";
      } else if (auto* n = st.as<ReductionAssign>()) {
        target = n->lvalue.get();
        switch (n->op) {
          case ReduceOp::Sum:
          case ReduceOp::Count: op = "Sum"; break;
          case ReduceOp::Product: op = "Product"; break;
          case ReduceOp::Any: op = "Or"; break;
          case ReduceOp::All:
            throw EmitError("&&= onto another rank's vertex has no MPI translation", st.span.begin);
        }
      } else if (auto* n = st.as<AssignStmt>()) {
        target = n->lvalue.get();
        op = "Overwrite";
      }
      if (!target || !target->as<MemberAccess>()) return;
      const int p = tp_.info(*target).symbol;
      if (sym(p).type.is(DslType::Kind::PropEdge))
        throw EmitError("writes to another rank's edge have no MPI translation", st.span.begin);
      const std::string box = fresh("box");
      line("sp__rt::Outbox<" + cpp_type(sym(p).type.prim) + "> " + box + "(g, sp__rt::Combine::" + op +
           ");  // aggregated by (vertex, " + sym(p).name + ")");
      boxes_[st.id] = box;
      sites_.push_back(&st);
    });
    for (const auto& [s, op] : ri.reductions) renamed.push_back(sym(s).name);
    return renamed;
  }

  // Sends a write to a vertex this rank may not own.
  void mpi_send(const Stmt& s, const std::string& idx, const std::string& value,
                const std::function<void()>& local) {
    open("if (g.owns(" + idx + "))");
    local();
    close(" else {");
    ++indent_;
    line(boxes_.at(s.id) + ".add(g.owner(" + idx + "), " + idx + ", " + value + ");");
    close();
  }

  void mpi_region_end(const RegionInfo& ri, const std::vector<std::string>&) {
    std::vector<const Stmt*> sites;
    sites.swap(sites_);
    if (!sites.empty()) {
      open("if (g.nranks > 1)");
      for (const Stmt* st : sites) {
        const std::string& box = boxes_.at(st->id);
        open("for (const auto& [sp__v, sp__val] : " + box + ".exchange(g))");
        if (auto* n = st->as<MinMaxAssign>()) {
          const int p = tp_.info(*n->targets[0]).symbol;
          const std::string e = sym(p).name + "[sp__v]";
          open("if (sp__val " + std::string(n->comparator == Comparator::Min ? "<" : ">") + " " + e + ")");
          line(e + " = sp__val;");
          for (std::size_t i = 0; i < n->companions.size(); ++i) {
            const Expr& t = *n->targets[i + 1];
            if (!n->companions[i]->as<Literal>())
              throw EmitError("Min/Max companion values must be constants for the MPI target",
                              n->companions[i]->span.begin);
            line(sym(tp_.info(t).symbol).name + "[sp__v] = " + ex(*n->companions[i]) + ";");
          }
          close();
        } else if (auto* n = st->as<ReductionAssign>()) {
          const std::string e = sym(tp_.info(*n->lvalue).symbol).name + "[sp__v]";
          switch (n->op) {
            case ReduceOp::Sum:
            case ReduceOp::Count: line(e + " += sp__val;"); break;
            case ReduceOp::Product: line(e + " *= sp__val;"); break;
            default: line(e + " = " + e + " || sp__val;"); break;
          }
        } else if (auto* n = st->as<AssignStmt>()) {
          line(sym(tp_.info(*n->lvalue).symbol).name + "[sp__v] = sp__val;");
        }
        close();
      }
      close();
    }
    for (const auto& [s, op] : ri.reductions) {
      const std::string acc = rename_.at(s);
      rename_.erase(s);
      const std::string x = sym(s).name;
      switch (op) {
        case ReduceOp::Sum:
        case ReduceOp::Count: line(x + " += sp__rt::allreduce(" + acc + ", MPI_SUM);"); break;
        case ReduceOp::Product: line(x + " *= sp__rt::allreduce(" + acc + ", MPI_PROD);"); break;
        case ReduceOp::All: line(x + " = " + x + " && sp__rt::allreduce<bool>(" + acc + ", MPI_LAND);"); break;
        case ReduceOp::Any: line(x + " = " + x + " || sp__rt::allreduce<bool>(" + acc + ", MPI_LOR);"); break;
      }
    }
    for (const auto& [s, c] : ri.minmax_scalars) {
      const std::string mm = rename_.at(s);
      rename_.erase(s);
      line(sym(s).name + " = sp__rt::allreduce(" + mm + ", " + (c == Comparator::Min ? "MPI_MIN" : "MPI_MAX") +
           ");");
    }
  }

  // ---------------------------------------------------------------- CUDA

  // Symbols referenced by `body` (and `extra` expressions) that a kernel
  // must receive, plus the scalars it writes.
  void kernel_symbols(const BlockStmt& body, const std::vector<const Expr*>& extra, std::set<int>& used) {
    auto note = [&](const Expr& e) {
      const ExprInfo& info = tp_.info(e);
      if ((e.as<Identifier>() || e.as<MemberAccess>()) && info.symbol >= 0) used.insert(info.symbol);
      if (info.implicit_iterator >= 0) used.insert(info.implicit_iterator);
    };
    for (const Expr* e : extra)
      if (e) walk_expr(*e, note);
    walk_block(body, [&](const Stmt& s) {
      stmt_exprs(s, note);
      if (tp_.info(s).sets_convergence_flag) used.insert(tp_.fixed_points.at(tp_.info(s).fixed_point).flag);
    });
  }

  // Builds the parameter list for a kernel of region `rid` and installs the
  // device renames. Returns (params, pointer scalars).
  std::vector<KernelParam> kernel_params(NodeId rid, const std::set<int>& used, std::vector<int>& pointers) {
    std::vector<KernelParam> params;
    params.push_back({"sp__rt::DeviceGraph " + graph(), "sp__dg"});
    const RegionInfo& ri = tp_.regions.at(rid);
    std::set<int> flags;
    for (const auto& [id, fp] : tp_.fixed_points)
      if (fp.fused && fp.function == fn_) flags.insert(fp.flag);
    for (int u : used) {
      const Symbol& s = sym(u);
      if (s.type.is(DslType::Kind::Graph)) continue;
      if (s.storage == StorageClass::Property) {
        params.push_back({cpp_type(s.type.prim) + "* " + device_name(u), device_name(u)});
        continue;
      }
      if (s.region >= 0) continue;  // declared inside the kernel
      if (s.type.is(DslType::Kind::SetN))
        throw EmitError("sets cannot be read inside a CUDA kernel", s.span.begin);
      const std::string t = cpp_type(s.type, s.span);
      if (ri.writes.count(u) || (flags.count(u) && kernel_written_.count(u))) {
        params.push_back({t + "* " + device_name(u), device_name(u)});
        pointers.push_back(u);
        rename_[u] = "*" + device_name(u);
      } else {
        params.push_back({t + " " + s.name, s.name});
      }
    }
    return params;
  }

  void launch(const std::string& name, const std::vector<KernelParam>& params, const std::vector<int>& pointers,
              const std::string& blocks) {
    for (int p : pointers) {
      if (direction(p) == TransferDirection::DeviceToHostAtEnd) continue;
      line("SP_RT_CHECK(cudaMemcpy(" + device_name(p) + ", &" + sym(p).name + ", sizeof(" +
           cpp_type(sym(p).type, sym(p).span) + "), cudaMemcpyHostToDevice));");
    }
    std::string args;
    for (std::size_t i = 0; i < params.size(); ++i) args += (i ? ", " : "") + params[i].arg;
    line(name + "<<<" + blocks + ", sp__threads>>>(" + args + ");");
    line("SP_RT_CHECK(cudaGetLastError());");
    for (int p : pointers) {
      if (direction(p) == TransferDirection::DeviceToHostAtEnd) continue;
      line("SP_RT_CHECK(cudaMemcpy(&" + sym(p).name + ", " + device_name(p) + ", sizeof(" +
           cpp_type(sym(p).type, sym(p).span) + "), cudaMemcpyDeviceToHost));");
    }
  }

  // Switches output to the kernel buffer; returns the state to restore.
  struct Saved {
    std::string* out;
    int indent;
    std::map<int, std::string> rename;
  };
  Saved enter_kernel(const std::string& signature) {
    Saved saved{out_, indent_, rename_};
    out_ = &kernel_text_;
    kernel_text_.clear();
    indent_ = 0;
    kernel_ = true;
    open("__global__ void " + signature);
    return saved;
  }
  void leave_kernel(Saved& saved) {
    close();
    kernels_ += kernel_text_ + "\n";
    out_ = saved.out;
    indent_ = saved.indent;
    kernel_ = false;
  }
  std::string signature(const std::string& name, const std::vector<KernelParam>& params) {
    std::string sig = name + "(";
    for (std::size_t i = 0; i < params.size(); ++i) sig += (i ? ", " : "") + params[i].decl;
    return sig + ")";
  }

  void forall_kernel(const Stmt& s, const ForallStmt& f) {
    const int it = tp_.info(s).iterator;
    const std::string itn = sym(it).name;
    if (f.range->as<Identifier>())
      throw EmitError("a parallel loop over a set has no CUDA translation", f.range->span.begin);
    const auto& call = *f.range->as<ProcCallExpr>();
    const GraphMethod method = tp_.info(*f.range).method;
    std::set<int> used;
    kernel_symbols(*f.body, {f.range.get(), f.filter.get()}, used);
    used.erase(it);
    std::vector<int> pointers;
    const std::map<int, std::string> host_rename = rename_;
    std::vector<KernelParam> params = kernel_params(s.id, used, pointers);
    const std::string name = fresh("kernel");

    std::string count = graph() + ".num_nodes()";
    std::string host_blocks = "sp__blocks";
    std::string src_host;
    if (method != GraphMethod::Nodes) {
      // The source vertex is evaluated on the host and passed by value.
      src_host = ex(*call.args[0].value);
      const std::string deg = method == GraphMethod::NodesTo ? ".rev_offsets" : ".offsets";
      count = graph() + deg + "[" + ex(*call.args[0].value, 5) + " + 1] - " + graph() + deg + "[" +
              ex(*call.args[0].value) + "]";
    }

    Saved saved = enter_kernel(signature(name, params));
    LoopCtx ctx;
    ctx.iterator = it;
    if (method == GraphMethod::Nodes) {
      line("const int " + itn + " = blockIdx.x * blockDim.x + threadIdx.x;");
      open("if (" + itn + " < " + graph() + ".num_nodes())");
    } else {
      const std::string t = fresh("t");
      const std::string src = ex(*call.args[0].value, 5);
      const std::string g = graph();
      ctx.source = ex(*call.args[0].value);
      ctx.method = method;
      line("const int " + t + " = blockIdx.x * blockDim.x + threadIdx.x;");
      if (method == GraphMethod::NodesTo) {
        open("if (" + t + " < " + g + ".rev_offsets[" + src + " + 1] - " + g + ".rev_offsets[" + src + "])");
        ctx.edge = fresh("e");
        line("const int " + itn + " = " + g + ".rev_adj[" + g + ".rev_offsets[" + src + "] + " + t + "];");
        line("const int " + ctx.edge + " = " + g + ".rev_eid[" + g + ".rev_offsets[" + src + "] + " + t + "];");
      } else {
        ctx.edge = fresh("e");
        open("if (" + t + " < " + g + ".offsets[" + src + " + 1] - " + g + ".offsets[" + src + "])");
        line("const int " + ctx.edge + " = " + g + ".offsets[" + src + "] + " + t + ";");
        line("const int " + itn + " = " + g + ".adj[" + ctx.edge + "];");
      }
      loops_.push_back(ctx);
    }
    if (f.filter) line("if (!" + ex(*f.filter, 6) + ") return;");
    block(*f.body);
    if (method != GraphMethod::Nodes) loops_.pop_back();
    close();
    leave_kernel(saved);
    rename_ = host_rename;

    if (method != GraphMethod::Nodes) {
      host_blocks = fresh("nblocks");
      line("const unsigned " + host_blocks + " = std::max(1u, static_cast<unsigned>(" + count +
           " + sp__threads - 1) / sp__threads);");
    }
    launch(name, params, pointers, host_blocks);
  }

  void init_kernel(const std::vector<std::pair<int, std::string>>& values, const std::string& count) {
    const std::string name = fresh("init");
    std::vector<KernelParam> params;
    params.push_back({"int sp__count", count});
    for (std::size_t i = 0; i < values.size(); ++i) {
      const int p = values[i].first;
      const std::string t = cpp_type(sym(p).type.prim);
      params.push_back({t + "* " + device_name(p), device_name(p)});
      params.push_back({t + " sp__a" + std::to_string(i), values[i].second});
    }
    Saved saved = enter_kernel(signature(name, params));
    line("const int sp__i = blockIdx.x * blockDim.x + threadIdx.x;");
    open("if (sp__i < sp__count)");
    for (std::size_t i = 0; i < values.size(); ++i)
      line(device_name(values[i].first) + "[sp__i] = sp__a" + std::to_string(i) + ";");
    close();
    leave_kernel(saved);
    std::string blocks = "sp__blocks";
    if (count.find("num_edges") != std::string::npos)
      blocks = "std::max(1u, static_cast<unsigned>(" + count + " + sp__threads - 1) / sp__threads)";
    launch(name, params, {}, blocks);
  }

  void bfs_cuda(const Stmt& s, const IterateInBfsStmt& b) {
    const std::string level = fresh("level");
    const std::string more = fresh("more");
    const std::string more_h = fresh("more_h");
    const std::string depth = fresh("depth");
    const std::string root = fresh("root");
    const std::string g = graph();
    open("");
    line("const int " + root + " = " + ex(*b.root) + ";");
    line("int* " + level + " = sp__rt::device_alloc<int>(" + g + ".num_nodes());");
    line("bool* " + more + " = sp__rt::device_alloc<bool>(1);");
    line("SP_RT_CHECK(cudaMemset(" + level + ", 0xff, sizeof(int) * " + g + ".num_nodes()));");
    line("sp__rt::store_device(" + level + " + " + root + ", 0);");
    line("int " + depth + " = 0;");
    line("bool " + more_h + " = true;");
    open("while (" + more_h + ")");
    line("sp__rt::store_device(" + more + ", false);");
    line("sp__rt::bfs_expand<<<sp__blocks, sp__threads>>>(sp__dg, " + level + ", " + depth + ", " + more + ");");
    bfs_kernel(s.id, *b.body, tp_.info(s).iterator, level, depth);
    line(more_h + " = sp__rt::load_device(" + more + ");");
    line("++" + depth + ";");
    close();
    if (b.reverse_body) {
      const NodeId rev = tp_.reverse_region(s.id);
      open("for (int sp__r = " + depth + " - 1; sp__r >= 0; --sp__r)");
      bfs_kernel(rev, *b.reverse_body, tp_.regions.at(rev).iterator, level, "sp__r");
      close();
    }
    line("SP_RT_CHECK(cudaFree(" + more + "));");
    line("SP_RT_CHECK(cudaFree(" + level + "));");
    close();
  }

  void bfs_kernel(NodeId rid, const BlockStmt& body, int it, const std::string& level, const std::string& depth) {
    region_ = rid;
    std::set<int> used;
    kernel_symbols(body, {}, used);
    used.erase(it);
    std::vector<int> pointers;
    const std::map<int, std::string> host_rename = rename_;
    std::vector<KernelParam> params = kernel_params(rid, used, pointers);
    params.push_back({"const int* sp__level", level});
    params.push_back({"int sp__depth", depth});
    const std::string name = fresh("kernel");
    Saved saved = enter_kernel(signature(name, params));
    const std::string itn = sym(it).name;
    line("const int " + itn + " = blockIdx.x * blockDim.x + threadIdx.x;");
    open("if (" + itn + " < " + graph() + ".num_nodes() && sp__level[" + itn + "] == sp__depth)");
    bfs_level_ = "sp__level";
    block(body);
    bfs_level_.clear();
    close();
    leave_kernel(saved);
    rename_ = host_rename;
    launch(name, params, pointers, "sp__blocks");
    region_ = -1;
  }

  const TypedProgram& tp_;
  EmitOptions opt_;
  const TransferPlan* plan_override_;
  TransferPlan plan_;
  int main_fn_ = 0;
  int fn_ = 0;
  std::string graph_;

  std::string kernels_;
  std::string kernel_text_;
  std::string functions_;
  std::string main_;
  std::string* out_ = &functions_;
  int indent_ = 0;
  int counter_ = 0;

  NodeId region_ = -1;
  bool kernel_ = false;
  std::string bfs_level_;
  std::vector<LoopCtx> loops_;
  std::map<int, std::string> rename_;
  std::set<int> declared_;
  std::set<int> kernel_written_;
  std::map<NodeId, std::string> boxes_;
  std::vector<const Stmt*> sites_;
};

}  // namespace

EmittedUnit emit(const TypedProgram& tp, const EmitOptions& options) {
  return Emitter(tp, options, nullptr).run();
}

EmittedUnit emit_sequential(const TypedProgram& tp) {
  EmitOptions o;
  o.target = Target::Seq;
  return emit(tp, o);
}

EmittedUnit emit_openmp(const TypedProgram& tp, Schedule schedule) {
  EmitOptions o;
  o.target = Target::Omp;
  o.schedule = schedule;
  return emit(tp, o);
}

EmittedUnit emit_mpi(const TypedProgram& tp) {
  EmitOptions o;
  o.target = Target::Mpi;
  return emit(tp, o);
}

EmittedUnit emit_cuda(const TypedProgram& tp, const TransferPlan& plan) {
  EmitOptions o;
  o.target = Target::Cuda;
  return Emitter(tp, o, &plan).run();
}

}  // namespace starplat
