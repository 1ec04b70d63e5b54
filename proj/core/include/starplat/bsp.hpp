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
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "starplat/interpreter.hpp"

namespace starplat {

enum class CombineOp { Min, Max, Sum, Product, Or, Overwrite };

std::string_view to_string(CombineOp op);

/// A write to a vertex (or edge) owned by another rank.
struct Message {
  int index = -1;
  bool edge = false;
  int property = -1;
  Primitive prim = Primitive::Int;
  Value value;
  CombineOp op = CombineOp::Overwrite;
  /// Min/Max only: (property, value) pairs applied with a winning value.
  std::vector<std::pair<int, Value>> companions;
};

/// Per-destination outgoing messages of one rank in one superstep. add()
/// folds a message into an existing one for the same (index, property), so
/// each pair is sent at most once.
class SendBuffer {
 public:
  explicit SendBuffer(int nranks = 1) : out_(nranks), pos_(nranks) {}

  void add(int dest, Message m);
  const std::vector<Message>& to(int dest) const { return out_[dest]; }
  int nranks() const { return static_cast<int>(out_.size()); }
  /// Messages handed to add(), before folding.
  long long raw_count() const { return raw_; }
  /// Messages that will actually be sent.
  long long size() const;
  void clear();

 private:
  std::vector<std::vector<Message>> out_;
  /// Per destination: (edge, index, property, op) -> position in out_.
  std::vector<std::map<std::tuple<bool, int, int, CombineOp>, std::size_t>> pos_;
  long long raw_ = 0;
};

/// Folds `incoming` into the owner's copy `current` of the same element.
/// Returns true when the owner's value changed (Min/Max: the message won).
bool combine(CombineOp op, Primitive prim, Value& current, const Value& incoming);

struct SimOptions {
  int nranks = 1;
  /// Order in which ranks run within a superstep (a permutation of
  /// 0..nranks-1); empty means ascending. Results must not depend on it.
  std::vector<int> rank_order;
  /// Each rank re-runs an eligible fixedPoint body over its own vertices
  /// until nothing local changes before exchanging messages.
  bool local_fixpoint_per_superstep = false;
  RunOptions run;
};

struct RankStats {
  int rank = 0;
  long long local_updates = 0;
  /// Messages sent after aggregation, and before.
  long long msgs_out = 0;
  long long raw_msgs_out = 0;
};

struct Superstep {
  int index = 0;
  /// "forall", "bfs-discover", "bfs-forward" or "bfs-reverse".
  std::string kind;
  std::vector<RankStats> ranks;
  /// No rank updated anything or sent a message.
  bool finished = false;

  long long messages() const;
  long long raw_messages() const;
  long long updates() const;
};

struct SimResult {
  RunResult result;
  std::vector<Superstep> trace;
};

/// Runs `tp` as `nranks` block-partitioned processes in lock-step
/// supersteps. Throws PartitionError for nranks < 1 or a bad rank order,
/// plus everything run() throws.
SimResult simulate(const TypedProgram& tp, const CsrGraph& g, const ArgMap& args,
                   const SimOptions& options);

/// Tab-separated trace: superstep, rank, local_updates, msgs_out, finished.
std::string trace_tsv(const std::vector<Superstep>& trace);

}  // namespace starplat
