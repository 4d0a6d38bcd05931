// Copyright 2026 The cyclecut Authors
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

// Linear-time computation of the minimum cycle number of a double ear
// decomposable multigraph.
//
// The engine repeatedly applies five reductions, in this priority order:
//
//   loop       remove one loop copy, c += 1 (the final loop ends the run)
//   resolve    suppress a degree-2 node, merging its two edge copies
//   quadruple  the whole graph is a 4-fold edge, c += 2, end of run
//   triple     drop two copies of a 3-fold edge, c += 1
//   double     peel a maximal path of double edges plus one closing edge
//              between its endpoints, c += 1
//
// Parallel edges are kept as weighted bundles. Every surviving edge copy
// carries a CopyRecord describing which original edges it stands for, so
// the trace can be expanded into an explicit minimum cycle decomposition.

#ifndef CYCLECUT_REDUCTION_HPP_
#define CYCLECUT_REDUCTION_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cyclecut/multigraph.hpp"

namespace cyclecut {

using RecordId = std::uint32_t;
using BundleId = std::uint32_t;

inline constexpr BundleId kNoBundle = ~BundleId{0};

// A walk in the original graph between `end_a` and `end_b`. Leaves are
// single original edges; a concatenation joins `left` (end_a .. via) and
// `right` (via .. end_b) through a resolved degree-2 node.
struct CopyRecord {
  NodeId end_a = 0;
  NodeId end_b = 0;
  RecordId left = 0;
  RecordId right = 0;
  std::uint32_t via_or_edge = 0;
  bool leaf = true;
};

struct OrientedEdge {
  EdgeId edge;
  NodeId from;
  NodeId to;
};

struct LoopRemoved {
  NodeId node;
  RecordId record;
};
struct FinalLoop {
  NodeId node;
  RecordId record;
};
// The path v0 .. vl lives in the trace's pools; use ReductionTrace::nodes()
// and ReductionTrace::path() to read it.
struct DoubleEdgePath {
  std::uint32_t node_offset;
  std::uint32_t record_offset;
  std::uint32_t length;  // l, the number of path edges
  RecordId closing;      // joins vl and v0
};
struct TripleEdge {
  NodeId u;
  NodeId w;
  std::array<RecordId, 2> removed;
};
struct QuadrupleEdge {
  NodeId u;
  NodeId w;
  std::array<RecordId, 4> copies;  // cycles are (0, 1) and (2, 3)
};
struct Resolved {
  NodeId node;
  RecordId merged;
};

using ReductionStep =
    std::variant<LoopRemoved, FinalLoop, DoubleEdgePath, TripleEdge, QuadrupleEdge, Resolved>;

// Number of cycles a step contributes to c.
int cycle_contribution(const ReductionStep& step);

struct ReductionTrace {
  std::size_t original_nodes = 0;
  std::size_t original_edges = 0;
  // Records [0, original_edges) are the leaves of the original edges.
  std::vector<CopyRecord> records;
  std::vector<ReductionStep> steps;
  std::vector<NodeId> path_nodes;
  std::vector<RecordId> path_records;

  // v0 .. vl of a DoubleEdgePath step.
  std::span<const NodeId> nodes(const DoubleEdgePath& p) const {
    return std::span<const NodeId>(path_nodes).subspan(p.node_offset, p.length + 1);
  }
  // path()[i] joins nodes()[i] and nodes()[i + 1].
  std::span<const RecordId> path(const DoubleEdgePath& p) const {
    return std::span<const RecordId>(path_records).subspan(p.record_offset, p.length);
  }

  // Expands a record into the original walk it stands for, starting at
  // `start` (which must be one of the record's ends).
  std::vector<OrientedEdge> expand(RecordId record, NodeId start) const;
  void expand_into(RecordId record, NodeId start, std::vector<OrientedEdge>& out) const;
};

enum class FailureKind {
  kEmptyGraph,
  kDisconnected,
  kDegree,
  kQuadrupleNotWhole,
  kStuck,
};

struct NotDecomposable {
  FailureKind kind = FailureKind::kStuck;
  NodeId node = kNoNode;  // offending node for kDegree
  std::size_t degree = 0;
  std::string reason;
};

struct Decomposable {
  std::uint64_t c = 0;
  ReductionTrace trace;
};

class DecompositionResult {
 public:
  DecompositionResult(Decomposable d) : value_(std::move(d)) {}
  DecompositionResult(NotDecomposable n) : value_(std::move(n)) {}

  bool decomposable() const { return std::holds_alternative<Decomposable>(value_); }
  const Decomposable& success() const { return std::get<Decomposable>(value_); }
  Decomposable& success() { return std::get<Decomposable>(value_); }
  const NotDecomposable& failure() const { return std::get<NotDecomposable>(value_); }

 private:
  std::variant<Decomposable, NotDecomposable> value_;
};

enum class StepResult { kNotApplicable, kApplied, kFailed };

// Mutable reduction state over weighted edge bundles. All list operations
// are O(1) through back-pointers; every node has at most four incident
// bundles because degrees never exceed four.
class WorkState {
 public:
  // Precondition: g connected, every degree in {2, 4}. `order`, if given,
  // is a permutation of g's nodes; state node i is then g's node order[i].
  // The accessors below use state ids, the trace always uses g's ids.
  static WorkState init(const Multigraph& g, std::span<const NodeId> order = {});

  StepResult step_loop();
  StepResult step_resolve();
  StepResult step_quadruple();
  StepResult step_triple();
  StepResult step_double();

  bool finished() const { return finished_; }
  std::uint64_t cycles() const { return c_; }
  const std::string& failure_reason() const { return failure_; }
  const ReductionTrace& trace() const { return trace_; }
  ReductionTrace take_trace() { return std::move(trace_); }

  std::size_t live_nodes() const { return live_nodes_; }
  std::size_t live_copies() const { return live_copies_; }
  std::span<const NodeId> v2() const { return v2_.items; }
  std::span<const NodeId> v4() const { return v4_.items; }
  std::span<const BundleId> e2() const { return e2_.items; }
  std::span<const BundleId> e3() const { return e3_.items; }
  std::span<const BundleId> e4() const { return e4_.items; }
  std::span<const BundleId> loops() const { return loops_.items; }
  std::size_t degree(NodeId v) const { return nodes_[v].degree; }
  std::size_t bundle_weight(BundleId b) const { return bundles_[b].weight; }
  std::pair<NodeId, NodeId> bundle_ends(BundleId b) const { return {bundles_[b].a, bundles_[b].b}; }
  std::size_t deferred_paths() const { return deferrals_; }

  // Checks every bookkeeping invariant; returns a description of the first
  // violation. Linear time, meant for tests.
  std::optional<std::string> audit() const;

 private:
  friend DecompositionResult run(const Multigraph& g);

  // Incidences of one node of g, in edge id order; a loop appears twice.
  struct FlatNode {
    std::array<NodeId, 4> neighbor;
    std::array<EdgeId, 4> edge;
    std::uint8_t degree = 0;
  };
  static std::vector<FlatNode> flatten(const Multigraph& g);
  static WorkState build(const Multigraph& g, std::span<const NodeId> order,
                         std::span<const FlatNode> adjacency);

  enum class ListTag : std::uint8_t { kNone, kV2, kV4, kE2, kE3, kE4, kLoop };

  struct IndexedList {
    std::vector<std::uint32_t> items;
  };

  struct Node {
    std::array<BundleId, 4> bundles{kNoBundle, kNoBundle, kNoBundle, kNoBundle};
    std::array<NodeId, 4> neighbors{};  // far end of bundles[i]
    std::uint8_t bundle_count = 0;
    std::uint8_t degree = 0;
    ListTag list = ListTag::kNone;
    bool alive = true;
    bool visited = false;
    std::uint32_t list_pos = 0;
    BundleId stuck_seed = kNoBundle;
    NodeId stuck_partner = kNoNode;
  };

  struct Bundle {
    NodeId a = 0;
    NodeId b = 0;
    std::array<RecordId, 4> copies{};
    std::uint8_t weight = 0;
    ListTag list = ListTag::kNone;
    bool deferred = false;
    std::uint32_t list_pos = 0;
  };

  IndexedList& list_for(ListTag tag);
  void list_insert(ListTag tag, std::uint32_t item, ListTag& slot_tag, std::uint32_t& slot_pos);
  void list_erase(ListTag& slot_tag, std::uint32_t& slot_pos);
  void relist_node(NodeId v);
  void relist_bundle(BundleId b);

  BundleId find_bundle(NodeId u, NodeId w) const;
  BundleId new_bundle(NodeId u, NodeId w);
  void attach(NodeId v, BundleId b);
  void detach(NodeId v, BundleId b);
  void push_copy(BundleId b, RecordId r);
  RecordId pop_copy(BundleId b);
  void drop_bundle_if_empty(BundleId b);
  void touch(NodeId v);
  bool still_stuck(NodeId v, NodeId partner) const;
  std::size_t distinct_neighbors(NodeId v) const;
  NodeId orig(NodeId v) const { return to_orig_.empty() ? v : to_orig_[v]; }

  std::vector<Node> nodes_;
  std::vector<NodeId> to_orig_;
  std::vector<Bundle> bundles_;
  std::vector<BundleId> free_bundles_;
  IndexedList v2_, v4_, e2_, e3_, e4_, loops_;
  std::size_t live_nodes_ = 0;
  std::size_t live_copies_ = 0;
  std::size_t deferrals_ = 0;
  std::uint64_t c_ = 0;
  bool finished_ = false;
  std::string failure_;
  ReductionTrace trace_;
  NodeId resolve_hint_ = kNoNode;
  std::vector<NodeId> scratch_nodes_;
  std::vector<NodeId> path_nodes_;
  std::vector<BundleId> path_bundles_;
  std::vector<BundleId> scratch_bundles_;
};

// Decides double ear decomposability of a connected graph and computes c(G).
DecompositionResult run(const Multigraph& g);

// Sum of run() over connected components; fails if any component fails
// (isolated nodes included). Failure node ids refer to g.
struct CycleNumber {
  bool decomposable = false;
  std::uint64_t c = 0;
  NotDecomposable failure;
};
CycleNumber cycle_number(const Multigraph& g);

}  // namespace cyclecut

#endif  // CYCLECUT_REDUCTION_HPP_
