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

#include "starplat/bsp.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "machine.hpp"

namespace starplat {

using namespace ast;

std::string_view to_string(CombineOp op) {
  switch (op) {
    case CombineOp::Min: return "min";
    case CombineOp::Max: return "max";
    case CombineOp::Sum: return "sum";
    case CombineOp::Product: return "product";
    case CombineOp::Or: return "or";
    case CombineOp::Overwrite: return "overwrite";
  }
  return "?";
}

bool combine(CombineOp op, Primitive prim, Value& current, const Value& incoming) {
  switch (op) {
    case CombineOp::Min:
    case CombineOp::Max: {
      const bool wins = compare(op == CombineOp::Min ? BinaryOp::Lt : BinaryOp::Gt, incoming, current);
      if (wins) current = convert(incoming, prim);
      return wins;
    }
    case CombineOp::Sum:
    case CombineOp::Product: {
      const Value before = current;
      const BinaryOp bop = op == CombineOp::Sum ? BinaryOp::Add : BinaryOp::Mul;
      current = convert(arith(bop, current, incoming, promote(prim, primitive_of(incoming))), prim);
      return !(current == before);
    }
    case CombineOp::Or: {
      const bool before = current.truthy();
      current = Value::of_bool(before || incoming.truthy());
      return current.truthy() != before;
    }
    case CombineOp::Overwrite: {
      const Value before = current;
      current = convert(incoming, prim);
      return !(current == before);
    }
  }
  return false;
}

void SendBuffer::add(int dest, Message m) {
  ++raw_;
  auto& slots = pos_[dest];
  const auto key = std::make_tuple(m.edge, m.index, m.property, m.op);
  const auto it = slots.find(key);
  if (it == slots.end()) {
    slots.emplace(key, out_[dest].size());
    out_[dest].push_back(std::move(m));
    return;
  }
  Message& held = out_[dest][it->second];
  if (m.op == CombineOp::Min || m.op == CombineOp::Max) {
    if (combine(m.op, m.prim, held.value, m.value)) held.companions = std::move(m.companions);
  } else {
    combine(m.op, m.prim, held.value, m.value);
  }
}

long long SendBuffer::size() const {
  long long total = 0;
  for (const auto& v : out_) total += static_cast<long long>(v.size());
  return total;
}

void SendBuffer::clear() {
  for (auto& v : out_) v.clear();
  for (auto& p : pos_) p.clear();
  raw_ = 0;
}

long long Superstep::messages() const {
  long long t = 0;
  for (const auto& r : ranks) t += r.msgs_out;
  return t;
}

long long Superstep::raw_messages() const {
  long long t = 0;
  for (const auto& r : ranks) t += r.raw_msgs_out;
  return t;
}

long long Superstep::updates() const {
  long long t = 0;
  for (const auto& r : ranks) t += r.local_updates;
  return t;
}

namespace {

// Pseudo property id for BFS level discovery messages.
constexpr int kLevelProperty = -2;

class Simulator : public detail::Machine {
 public:
  Simulator(const TypedProgram& tp, const CsrGraph& g, const SimOptions& options)
      : Machine(tp, g, options.run), nranks_(options.nranks), local_fixpoint_(options.local_fixpoint_per_superstep) {
    order_ = options.rank_order;
    if (order_.empty()) {
      for (int r = 0; r < nranks_; ++r) order_.push_back(r);
    }
    owner_.resize(g.n);
    for (int v = 0; v < g.n; ++v) owner_[v] = block_owner(g.n, nranks_, v);
    edge_owner_.resize(g.m);
    for (int v = 0; v < g.n; ++v)
      for (int e = g.offsets[v]; e < g.offsets[v + 1]; ++e) edge_owner_[e] = owner_[v];
  }

  std::vector<Superstep> take_trace() { return std::move(trace_); }

 protected:
  // ------------------------------------------------------------ supersteps

  void superstep(const std::string& kind, const std::set<int>& snapshot_props,
                 const std::function<void(int)>& compute) {
    snapshot_.clear();
    for (int p : snapshot_props) snapshot_[p] = props_[p];
    if (level_) level_snapshot_ = *level_;
    stats_.assign(nranks_, RankStats{});
    buffers_.assign(nranks_, SendBuffer(nranks_));
    red_private_.assign(nranks_, {});
    mm_private_.assign(nranks_, {});
    for (int r : order_) {
      rank_ = r;
      stats_[r].rank = r;
      compute(r);
    }
    rank_ = -1;

    for (int src = 0; src < nranks_; ++src) {
      stats_[src].rank = src;
      stats_[src].msgs_out = buffers_[src].size();
      stats_[src].raw_msgs_out = buffers_[src].raw_count();
      for (int dest = 0; dest < nranks_; ++dest)
        for (const Message& m : buffers_[src].to(dest)) apply(m);
    }
    for (int r = 0; r < nranks_; ++r)
      for (const auto& [sym, acc] : red_private_[r])
        scalars_[sym] = reduce_value(acc.first, scalars_[sym], acc.second, tp_.symbols[sym].type.prim);
    for (int r = 0; r < nranks_; ++r)
      for (const auto& [sym, acc] : mm_private_[r])
        if (beats(acc.first, acc.second, scalars_[sym])) scalars_[sym] = acc.second;

    Superstep step;
    step.index = static_cast<int>(trace_.size());
    step.kind = kind;
    step.ranks = stats_;
    step.finished = step.updates() == 0 && step.messages() == 0;
    trace_.push_back(std::move(step));
    snapshot_.clear();
  }

  void apply(const Message& m) {
    if (m.property == kLevelProperty) {
      if ((*level_)[m.index] < 0) (*level_)[m.index] = static_cast<int>(m.value.i);
      return;
    }
    Value& cur = props_[m.property][m.index];
    if (m.op == CombineOp::Min || m.op == CombineOp::Max) {
      if (!combine(m.op, m.prim, cur, m.value)) return;
      for (const auto& [p, v] : m.companions) props_[p][m.index] = v;
      return;
    }
    combine(m.op, m.prim, cur, m.value);
  }

  int owner(int index, bool edge) const { return edge ? edge_owner_[index] : owner_[index]; }
  bool local(int index, bool edge) const { return rank_ < 0 || owner(index, edge) == rank_; }

  void note_fused(const Stmt& s, bool value) {
    const StmtInfo& info = tp_.info(s);
    if (info.sets_convergence_flag && value) fused_hit_[info.fixed_point] = true;
  }

  void send(const Stmt& s, int index, bool edge, Message m) {
    m.index = index;
    m.edge = edge;
    const bool sets_flag = std::any_of(m.companions.begin(), m.companions.end(),
                                       [](const auto& c) { return c.second.truthy(); }) ||
                           m.value.truthy();
    note_fused(s, sets_flag);
    buffers_[rank_].add(owner(index, edge), std::move(m));
  }

  std::set<int> region_props(NodeId region) const {
    std::set<int> out;
    const RegionInfo& ri = tp_.regions.at(region);
    for (int p : ri.remote_reads) out.insert(p);
    for (int p : ri.reads)
      if (tp_.symbols[p].storage == StorageClass::Property) out.insert(p);
    return out;
  }

  // --------------------------------------------------------------- regions

  void run_forall_region(const Stmt& s, const ForallStmt& f) override {
    const int it = tp_.info(s).iterator;
    region_ = s.id;
    const auto items = range_items(f);
    superstep("forall", region_props(s.id), [&](int r) {
      for (const auto& item : items)
        if (owner_[item.vertex] == r) run_item(f, it, item);
    });
    region_ = -1;
  }

  void run_bfs(const Stmt& s, const IterateInBfsStmt& b) override {
    const Value root = eval(*b.root);
    if (root.kind != Value::Kind::Node || root.i < 0 || root.i >= g_.n)
      throw RuntimeError("BFS root is not a vertex", b.root->span.begin);
    BfsState st;
    st.level.assign(g_.n, -1);
    st.level[root.i] = 0;
    st.levels.push_back({static_cast<int>(root.i)});
    const BfsState* saved = bfs_;
    bfs_ = &st;
    const int it = tp_.info(s).iterator;
    const std::set<int> fwd_props = region_props(s.id);

    for (std::size_t d = 0;; ++d) {
      const std::vector<int> frontier = st.levels[d];
      const int next_level = static_cast<int>(d) + 1;
      level_ = &st.level;
      superstep("bfs-discover", {}, [&](int r) {
        for (int v : frontier) {
          if (owner_[v] != r) continue;
          for (int w : g_.out_neighbors(v)) {
            if (owner_[w] == r) {
              if (st.level[w] < 0) {
                st.level[w] = next_level;
                ++stats_[r].local_updates;
              }
            } else if (level_snapshot_[w] < 0) {
              Message m;
              m.index = w;
              m.property = kLevelProperty;
              m.value = Value::of_int(next_level);
              m.op = CombineOp::Min;
              buffers_[r].add(owner_[w], std::move(m));
            }
          }
        }
      });
      level_ = nullptr;
      std::vector<int> next;
      for (int v = 0; v < g_.n; ++v)
        if (st.level[v] == next_level) next.push_back(v);

      region_ = s.id;
      superstep("bfs-forward", fwd_props, [&](int r) {
        for (int v : frontier)
          if (owner_[v] == r) run_bfs_body(*b.body, it, v);
      });
      region_ = -1;
      if (next.empty()) break;
      st.levels.push_back(std::move(next));
    }

    if (b.reverse_body) {
      const NodeId rev = tp_.reverse_region(s.id);
      const int rit = tp_.regions.at(rev).iterator;
      const std::set<int> rev_props = region_props(rev);
      region_ = rev;
      for (auto level = st.levels.rbegin(); level != st.levels.rend(); ++level) {
        superstep("bfs-reverse", rev_props, [&](int r) {
          for (int v : *level)
            if (owner_[v] == r) run_bfs_body(*b.reverse_body, rit, v);
        });
      }
      region_ = -1;
    }
    bfs_ = saved;
  }

  void run_fixed_point(const Stmt& s, const FixedPointStmt& fp) override {
    const FixedPointInfo& info = tp_.fixed_points.at(s.id);
    if (!info.fused) {
      Machine::run_fixed_point(s, fp);
      return;
    }
    const bool local = local_fixpoint_ && local_eligible(fp);
    long long iterations = 0;
    while (!scalars_[info.flag].truthy()) {
      count_iteration(s, iterations);
      fused_hit_[s.id] = false;
      if (local) {
        run_local_iteration(s, fp);
      } else {
        exec_block(*fp.body);
      }
      if (returned_) break;
      const bool direct = eval(*fp.convergence).truthy();
      const bool fused_finished = !fused_hit_[s.id];
      if (fused_finished && !direct)
        throw RuntimeError("fixedPoint on '" + fp.flag +
                               "': convergence flag reported finished while the condition is false",
                           s.span.begin);
      scalars_[info.flag] = Value::of_bool(fused_finished);
    }
    record_iterations(s.id, iterations);
  }

  // Body = parallel foralls then a host tail of whole copies and node
  // attaches, with no shared scalar updates in the foralls.
  bool local_eligible(const FixedPointStmt& fp) const {
    const auto* neg = fp.convergence->as<UnaryExpr>();
    if (!neg || neg->op != UnaryOp::Not || !neg->operand->as<Identifier>()) return false;
    const auto& stmts = fp.body->stmts;
    std::size_t i = 0;
    for (; i < stmts.size(); ++i) {
      const auto* f = stmts[i]->as<ForallStmt>();
      if (!f || !tp_.info(*stmts[i]).parallel) break;
      const RegionInfo& ri = tp_.regions.at(stmts[i]->id);
      if (!ri.reductions.empty() || !ri.minmax_scalars.empty()) return false;
      for (int w : ri.writes)
        if (is_shared_scalar(w)) return false;
    }
    if (i == 0) return false;
    for (; i < stmts.size(); ++i) {
      if (tp_.info(*stmts[i]).whole_copy) continue;
      const auto* e = stmts[i]->as<ExprStmt>();
      if (!e || tp_.info(*e->expr).method != GraphMethod::AttachNodeProperty) return false;
    }
    return true;
  }

  void run_local_iteration(const Stmt& s, const FixedPointStmt& fp) {
    const auto& stmts = fp.body->stmts;
    std::vector<const Stmt*> loops;
    std::vector<const Stmt*> tail;
    std::set<int> snap;
    for (const auto& st : stmts) {
      if (st->as<ForallStmt>() && tp_.info(*st).parallel) {
        loops.push_back(st.get());
        for (int p : region_props(st->id)) snap.insert(p);
      } else {
        tail.push_back(st.get());
      }
    }
    const int driver = tp_.info(*fp.convergence->as<UnaryExpr>()->operand).symbol;
    superstep("forall", snap, [&](int r) {
      const int begin = std::min(g_.n, r * block_size());
      const int end = std::min(g_.n, begin + block_size());
      long long rounds = 0;
      while (true) {
        if (++rounds > cap_)
          throw RuntimeError("fixedPoint on '" + fp.flag + "' did not settle locally within " +
                                 std::to_string(cap_) + " rounds",
                             s.span.begin);
        for (const Stmt* l : loops) {
          const auto& f = *l->as<ForallStmt>();
          const int it = tp_.info(*l).iterator;
          region_ = l->id;
          for (const auto& item : range_items(f))
            if (owner_[item.vertex] == r) run_item(f, it, item);
          region_ = -1;
        }
        for (const Stmt* t : tail) apply_tail_locally(*t, begin, end);
        bool active = false;
        for (int v = begin; v < end && !active; ++v) active = props_[driver][v].truthy();
        if (!active) break;
      }
    });
    for (const Stmt* t : tail) exec(*t);
  }

  int block_size() const { return (g_.n + nranks_ - 1) / nranks_; }

  void apply_tail_locally(const Stmt& s, int begin, int end) {
    if (const auto* a = s.as<AssignStmt>()) {
      const int dst = tp_.info(*a->lvalue).symbol;
      const int src = tp_.info(*a->value).symbol;
      for (int v = begin; v < end; ++v) props_[dst][v] = props_[src][v];
      return;
    }
    const auto& e = *s.as<ExprStmt>();
    const ExprInfo& ei = tp_.info(*e.expr);
    const auto& call = *e.expr->as<ProcCallExpr>();
    const int saved = rank_;
    rank_ = -1;
    for (std::size_t i = 0; i < ei.attach_symbols.size(); ++i) {
      const int sym = ei.attach_symbols[i];
      const Value v = convert(eval(*call.args[i].value), tp_.symbols[sym].type.prim);
      for (int u = begin; u < end; ++u) props_[sym][u] = v;
    }
    rank_ = saved;
  }

  // ---------------------------------------------------------------- memory

  Value load_prop(int prop, int index, bool edge) override {
    if (rank_ >= 0 && in_region() && !local(index, edge)) {
      const auto it = snapshot_.find(prop);
      if (it != snapshot_.end()) return it->second[index];
    }
    return props_[prop][index];
  }

  void store_prop(const Stmt& s, int prop, int index, bool edge, const Value& v) override {
    if (local(index, edge)) {
      props_[prop][index] = v;
      if (rank_ >= 0) {
        ++stats_[rank_].local_updates;
        note_fused(s, v.truthy());
      }
      return;
    }
    Message m;
    m.property = prop;
    m.prim = tp_.symbols[prop].type.prim;
    m.value = v;
    m.op = CombineOp::Overwrite;
    send(s, index, edge, std::move(m));
  }

  void reduce_prop(const Stmt& s, const detail::Place& p, ReduceOp op, const Value& v) override {
    if (local(p.index, p.edge)) {
      Machine::reduce_prop(s, p, op, v);
      return;
    }
    Message m;
    m.property = p.symbol;
    m.prim = p.prim;
    switch (op) {
      case ReduceOp::Sum:
      case ReduceOp::Count: m.op = CombineOp::Sum; break;
      case ReduceOp::Product: m.op = CombineOp::Product; break;
      case ReduceOp::Any: m.op = CombineOp::Or; break;
      case ReduceOp::All:
        throw RuntimeError("'&&=' on a remote property element is not supported by the simulator");
    }
    m.value = v;
    send(s, p.index, p.edge, std::move(m));
  }

  void minmax(const Stmt& s, Comparator c, const std::vector<detail::Place>& targets,
              const Value& candidate, const std::vector<Value>& companions) override {
    const detail::Place& t0 = targets[0];
    if (!t0.property) {
      if (rank_ >= 0 && in_region() && is_shared_scalar(t0.symbol)) {
        auto& slot = mm_private_[rank_];
        auto it = slot.find(t0.symbol);
        if (it == slot.end()) it = slot.emplace(t0.symbol, std::make_pair(c, scalars_[t0.symbol])).first;
        if (beats(c, candidate, it->second.second))
          it->second.second = convert(candidate, tp_.symbols[t0.symbol].type.prim);
        return;
      }
      Machine::minmax(s, c, targets, candidate, companions);
      return;
    }
    if (rank_ < 0) {
      Machine::minmax(s, c, targets, candidate, companions);
      return;
    }
    if (local(t0.index, t0.edge)) {
      if (!beats(c, candidate, props_[t0.symbol][t0.index])) return;
      props_[t0.symbol][t0.index] = convert(candidate, t0.prim);
      bool flag = false;
      for (std::size_t i = 0; i < companions.size(); ++i) {
        const detail::Place& t = targets[i + 1];
        const Value v = convert(companions[i], t.prim);
        flag = flag || v.truthy();
        if (t.property) {
          props_[t.symbol][t.index] = v;
        } else {
          scalars_[t.symbol] = v;
        }
      }
      ++stats_[rank_].local_updates;
      note_fused(s, flag);
      return;
    }
    if (!beats(c, candidate, load_prop(t0.symbol, t0.index, t0.edge))) return;
    Message m;
    m.property = t0.symbol;
    m.prim = t0.prim;
    m.value = convert(candidate, t0.prim);
    m.op = c == Comparator::Min ? CombineOp::Min : CombineOp::Max;
    for (std::size_t i = 0; i < companions.size(); ++i) {
      const detail::Place& t = targets[i + 1];
      m.companions.emplace_back(t.symbol, convert(companions[i], t.prim));
    }
    send(s, t0.index, t0.edge, std::move(m));
  }

  Value load_scalar(int symbol) override {
    if (rank_ >= 0) {
      const auto& slot = mm_private_[rank_];
      const auto it = slot.find(symbol);
      if (it != slot.end()) return it->second.second;
    }
    return scalars_[symbol];
  }

  void reduce_scalar(int symbol, ReduceOp op, const Value& v) override {
    if (rank_ < 0) {
      Machine::reduce_scalar(symbol, op, v);
      return;
    }
    const Primitive prim = tp_.symbols[symbol].type.prim;
    if (op == ReduceOp::Count) op = ReduceOp::Sum;
    auto& slot = red_private_[rank_];
    auto it = slot.find(symbol);
    if (it == slot.end()) {
      Value identity;
      switch (op) {
        case ReduceOp::Sum:
        case ReduceOp::Count: identity = zero_of(prim); break;
        case ReduceOp::Product: identity = convert(Value::of_int(1), prim); break;
        case ReduceOp::All: identity = Value::of_bool(true); break;
        case ReduceOp::Any: identity = Value::of_bool(false); break;
      }
      it = slot.emplace(symbol, std::make_pair(op, identity)).first;
    }
    it->second.second = reduce_value(op, it->second.second, v, prim);
  }

 private:
  int nranks_;
  bool local_fixpoint_;
  std::vector<int> order_;
  std::vector<int> owner_;
  std::vector<int> edge_owner_;

  int rank_ = -1;
  std::map<int, std::vector<Value>> snapshot_;
  std::vector<int>* level_ = nullptr;
  std::vector<int> level_snapshot_;
  std::vector<RankStats> stats_;
  std::vector<SendBuffer> buffers_;
  std::vector<std::map<int, std::pair<ReduceOp, Value>>> red_private_;
  std::vector<std::map<int, std::pair<Comparator, Value>>> mm_private_;
  std::map<NodeId, bool> fused_hit_;
  std::vector<Superstep> trace_;
};

}  // namespace

SimResult simulate(const TypedProgram& tp, const CsrGraph& g, const ArgMap& args,
                   const SimOptions& options) {
  if (options.nranks < 1) throw PartitionError("number of ranks must be at least 1");
  if (!options.rank_order.empty()) {
    std::vector<int> sorted = options.rank_order;
    std::sort(sorted.begin(), sorted.end());
    bool ok = static_cast<int>(sorted.size()) == options.nranks;
    for (int i = 0; ok && i < options.nranks; ++i) ok = sorted[i] == i;
    if (!ok) throw PartitionError("rank order must be a permutation of 0.." + std::to_string(options.nranks - 1));
  }
  Simulator sim(tp, g, options);
  SimResult out;
  out.result = sim.run(args);
  out.trace = sim.take_trace();
  return out;
}

std::string trace_tsv(const std::vector<Superstep>& trace) {
  std::ostringstream os;
  os << "superstep\trank\tlocal_updates\tmsgs_out\tfinished\n";
  for (const auto& step : trace)
    for (const auto& r : step.ranks)
      os << step.index << '\t' << r.rank << '\t' << r.local_updates << '\t' << r.msgs_out << '\t'
         << (step.finished ? 1 : 0) << '\n';
  return os.str();
}

}  // namespace starplat
