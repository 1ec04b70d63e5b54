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

// Tree-walking executor shared by the interpreter and the BSP simulator.
// The simulator overrides the region runners and the memory hooks that
// parallel-region code goes through.

#include <map>
#include <vector>

#include "starplat/graph.hpp"
#include "starplat/interpreter.hpp"
#include "starplat/sema.hpp"
#include "starplat/value.hpp"

namespace starplat::detail {

/// One element of an iteration range.
struct RangeItem {
  int vertex = 0;
  /// Forward edge index connecting the loop source and `vertex`, or -1.
  int edge = -1;
  /// Vertex the range is relative to (`v` in g.neighbors(v)), or -1.
  int source = -1;
  GraphMethod method = GraphMethod::None;
};

/// A property element or a scalar named by an lvalue.
struct Place {
  int symbol = -1;
  bool property = false;
  bool edge = false;
  int index = -1;
  Primitive prim = Primitive::Int;
};

class Machine {
 public:
  Machine(const TypedProgram& tp, const CsrGraph& g, const RunOptions& options);
  virtual ~Machine() = default;

  RunResult run(const ArgMap& args);

 protected:
  struct LoopCtx {
    int iterator = -1;
    int source = -1;
    GraphMethod method = GraphMethod::None;
    int edge = -1;
  };

  struct BfsState {
    std::vector<int> level;
    std::vector<std::vector<int>> levels;
  };

  // Statement execution.
  void exec_block(const ast::BlockStmt& b);
  void exec(const ast::Stmt& s);
  Value eval(const ast::Expr& e);

  /// Elements of a forall range, honouring BFS DAG restriction.
  std::vector<RangeItem> range_items(const ast::ForallStmt& f);
  /// Binds the iterator, applies the filter, runs the body.
  void run_item(const ast::ForallStmt& f, int iterator, const RangeItem& item);
  /// Runs `body` with `iterator` bound to `v` (BFS bodies).
  void run_bfs_body(const ast::BlockStmt& body, int iterator, int v);
  BfsState bfs_levels(int root) const;

  Place place(const ast::Expr& lvalue);
  Value load(const Place& p);
  void store(const ast::Stmt& s, const Place& p, const Value& v);
  bool beats(ast::Comparator c, const Value& cand, const Value& cur) const;
  Value reduce_value(ast::ReduceOp op, const Value& cur, const Value& v, Primitive prim) const;
  bool any_true(int property) const;
  bool in_region() const { return region_ >= 0; }
  bool is_shared_scalar(int symbol) const;

  // Region runners. The default implementations run sequentially.
  virtual void run_forall_region(const ast::Stmt& s, const ast::ForallStmt& f);
  virtual void run_bfs(const ast::Stmt& s, const ast::IterateInBfsStmt& b);
  virtual void run_fixed_point(const ast::Stmt& s, const ast::FixedPointStmt& fp);

  // Memory hooks for property elements and scalars touched inside regions.
  virtual Value load_prop(int prop, int index, bool edge);
  virtual void store_prop(const ast::Stmt& s, int prop, int index, bool edge, const Value& v);
  virtual void reduce_prop(const ast::Stmt& s, const Place& p, ast::ReduceOp op, const Value& v);
  virtual void minmax(const ast::Stmt& s, ast::Comparator c, const std::vector<Place>& targets,
                      const Value& candidate, const std::vector<Value>& companions);
  virtual Value load_scalar(int symbol);
  virtual void reduce_scalar(int symbol, ast::ReduceOp op, const Value& v);

  /// Checks the iteration cap; throws RuntimeError when exceeded.
  void count_iteration(const ast::Stmt& s, long long& iterations);
  void record_iterations(ast::NodeId stmt, long long iterations);

  const TypedProgram& tp_;
  const CsrGraph& g_;
  RunOptions options_;
  long long cap_ = 0;
  int function_ = 0;

  std::vector<Value> scalars_;
  std::vector<std::vector<Value>> props_;
  std::map<int, std::vector<int>> sets_;
  std::vector<LoopCtx> loops_;
  const BfsState* bfs_ = nullptr;
  ast::NodeId region_ = -1;
  bool returned_ = false;
  std::optional<Value> return_value_;
  std::map<ast::NodeId, long long> iterations_;
};

}  // namespace starplat::detail
