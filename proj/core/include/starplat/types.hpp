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

#include <string>

namespace starplat {

enum class Primitive { Int, Bool, Long, Float, Double };

/// Types a DSL program can name, plus two internal kinds (Void for
/// statement-like calls and NodeSeq for iteration ranges) that only appear as
/// expression annotations.
struct DslType {
  enum class Kind { Graph, Node, Edge, PropNode, PropEdge, Primitive, SetN, SetE, List, Void, NodeSeq };

  Kind kind = Kind::Void;
  /// Element type of PropNode/PropEdge, or the scalar type of Primitive.
  Primitive prim = Primitive::Int;
  /// Graph a property or set is bound to, as written (`propNode<int, g>`,
  /// `SetN<g>`); empty when omitted.
  std::string graph;

  static DslType graph_t() { return {Kind::Graph, Primitive::Int, {}}; }
  static DslType node_t() { return {Kind::Node, Primitive::Int, {}}; }
  static DslType edge_t() { return {Kind::Edge, Primitive::Int, {}}; }
  static DslType void_t() { return {Kind::Void, Primitive::Int, {}}; }
  static DslType node_seq() { return {Kind::NodeSeq, Primitive::Int, {}}; }
  static DslType prim_t(Primitive p) { return {Kind::Primitive, p, {}}; }
  static DslType prop_node(Primitive p) { return {Kind::PropNode, p, {}}; }
  static DslType prop_edge(Primitive p) { return {Kind::PropEdge, p, {}}; }

  bool is(Kind k) const { return kind == k; }
  bool is_prim(Primitive p) const { return kind == Kind::Primitive && prim == p; }
  bool is_bool() const { return is_prim(Primitive::Bool); }
  bool is_numeric() const { return kind == Kind::Primitive && prim != Primitive::Bool; }
  bool is_integral() const {
    return kind == Kind::Primitive && (prim == Primitive::Int || prim == Primitive::Long);
  }
  bool is_property() const { return kind == Kind::PropNode || kind == Kind::PropEdge; }

  /// Structural equality ignoring the optional graph binding.
  bool same(const DslType& o) const {
    if (kind != o.kind) return false;
    if (kind == Kind::Primitive || is_property()) return prim == o.prim;
    return true;
  }
};

std::string to_string(Primitive p);
/// DSL spelling, e.g. `propNode<int>`.
std::string to_string(const DslType& t);

/// Result of combining two numeric operands the way C does it: the wider of
/// the two (int < long < float < double).
Primitive promote(Primitive a, Primitive b);
int rank_of(Primitive p);

}  // namespace starplat
