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

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "starplat/ast.hpp"

namespace starplat {

enum class StorageClass {
  Parameter,
  Local,        // declared on the host side of a function
  ForallLocal,  // declared inside a parallel region, or a loop iterator
  Property,     // propNode / propEdge declaration
};

struct Symbol {
  int index = -1;
  std::string name;
  DslType type;
  Span span;
  StorageClass storage = StorageClass::Local;
  int function = -1;
  /// Parameter or declared directly in the function body.
  bool top_level = false;
  /// Parallel region (statement id) the symbol was declared in, or -1.
  ast::NodeId region = -1;
  bool is_iterator = false;
};

enum class GraphMethod {
  None,
  Nodes,
  Neighbors,
  NodesTo,
  NodesFrom,
  AttachNodeProperty,
  AttachEdgeProperty,
  NumNodes,
  NumEdges,
  CountOutNbrs,
  GetEdge,
  MinWt,
  MaxWt,
  IsAnEdge,
};

struct ExprInfo {
  DslType type;
  /// Identifier: resolved symbol. MemberAccess: the property symbol, or -1
  /// for the built-in edge `weight`.
  int symbol = -1;
  /// Bare property name inside a filter: the iterator it is read through.
  int implicit_iterator = -1;
  /// Bare bool node property inside a convergence expression: true when any
  /// vertex holds True.
  bool property_any = false;
  GraphMethod method = GraphMethod::None;
  /// attachNodeProperty / attachEdgeProperty: property per named argument.
  std::vector<int> attach_symbols;
};

enum class TargetClass {
  None,
  SharedScalar,  // host scalar updated from a parallel region: needs a reduction
  LocalScalar,   // loop-local scalar, or any scalar outside parallel regions
  Property,
};

enum class RegionKind { Forall, BfsForward, BfsReverse };

struct StmtInfo {
  /// Innermost enclosing parallel region (statement id), or -1 on the host.
  ast::NodeId region = -1;
  /// ForallStmt: true for the outermost parallel loop only.
  bool parallel = false;
  /// ForallStmt / IterateInBfsStmt: iterator symbol.
  int iterator = -1;
  /// DeclStmt: declared symbol.
  int decl = -1;
  /// Assign / Reduction / MinMax: classification of the first target.
  TargetClass target = TargetClass::None;
  /// AssignStmt between two whole properties (`P = Q`).
  bool whole_copy = false;
  /// Writes True into a fused driver property; emitters also clear the
  /// enclosing fixedPoint's finished flag here.
  bool sets_convergence_flag = false;
  ast::NodeId fixed_point = -1;
  /// Write to a property element not owned by the region iterator.
  bool remote_write = false;
};

/// One kernel-shaped parallel region: the outermost parallel forall, or one
/// body of an iterateInBFS.
struct RegionInfo {
  ast::NodeId stmt = -1;
  RegionKind kind = RegionKind::Forall;
  int function = -1;
  int iterator = -1;
  /// Scalars reduced into from the region, with their operator.
  std::vector<std::pair<int, ast::ReduceOp>> reductions;
  /// Scalars updated with Min/Max from the region.
  std::vector<std::pair<int, ast::Comparator>> minmax_scalars;
  std::set<int> reads;
  std::set<int> writes;
  /// Properties read through a vertex other than the region iterator.
  std::set<int> remote_reads;
  /// Statements writing a property element of a non-iterator vertex.
  std::vector<ast::NodeId> remote_write_sites;
};

struct FixedPointInfo {
  ast::NodeId stmt = -1;
  int function = -1;
  int flag = -1;
  /// Symbols the convergence expression reads.
  std::vector<int> linked;
  /// Bool properties driving convergence (the negated property and the
  /// properties copied into it).
  std::vector<int> drivers;
  /// Convergence can be tracked by a flag set at every driver write.
  bool fused = false;
  std::vector<ast::NodeId> fused_writes;
};

enum class TransferDirection { HostToDeviceOnce, DeviceToHostAtEnd, RoundTripPerIteration, DeviceOnly };

std::string_view to_string(TransferDirection d);

struct TransferEntry {
  int symbol = -1;
  std::string name;
  TransferDirection direction = TransferDirection::DeviceOnly;
};

struct TransferPlan {
  /// Ordered by symbol declaration.
  std::vector<TransferEntry> entries;

  const TransferEntry* find(std::string_view name) const;
};

struct FunctionInfo {
  std::vector<int> params;
  /// Parameters followed by top-level declarations, in source order.
  std::vector<int> top_level;
  std::vector<ast::NodeId> regions;
  std::vector<ast::NodeId> fixed_points;
  bool returns_value = false;
  DslType return_type;
  int graph_param = -1;
};

/// The AST plus everything sema learned about it, keyed by NodeId.
struct TypedProgram {
  ast::Program program;
  std::vector<Symbol> symbols;
  std::vector<ExprInfo> exprs;
  std::vector<StmtInfo> stmts;
  std::vector<FunctionInfo> functions;
  std::map<ast::NodeId, RegionInfo> regions;
  std::map<ast::NodeId, FixedPointInfo> fixed_points;
  /// Symbols read on the host inside each host loop (fixedPoint or `for`),
  /// including the fixedPoint convergence expression.
  std::map<ast::NodeId, std::set<int>> host_loop_reads;
  std::vector<Diagnostic> warnings;
  bool fixed_points_analyzed = false;

  const ExprInfo& info(const ast::Expr& e) const { return exprs.at(e.id); }
  const StmtInfo& info(const ast::Stmt& s) const { return stmts.at(s.id); }
  const Symbol& symbol(int index) const { return symbols.at(index); }
  int function_index(std::string_view name) const;
  /// Region key of the iterateInReverse body of BFS statement `bfs_stmt`;
  /// the forward body is keyed by the statement id itself.
  ast::NodeId reverse_region(ast::NodeId bfs_stmt) const { return program.node_count + bfs_stmt; }
};

/// Resolves names, assigns types and marks parallel regions. Throws
/// TypeError (with position) on the first violation; race hazards become
/// warnings.
TypedProgram typecheck(ast::Program program);

/// Links every fixedPoint to what its convergence expression reads and marks
/// driver writes for flag fusion. Idempotent. Throws SemaError when the body
/// writes nothing the convergence expression reads.
TypedProgram& analyze_fixedpoint(TypedProgram& tp);

/// Host/device traffic for function `function` (empty without parallel
/// regions).
TransferPlan analyze_transfers(const TypedProgram& tp, int function = 0);

/// parse_source + typecheck + analyze_fixedpoint.
TypedProgram analyze_source(std::string_view source);

}  // namespace starplat
