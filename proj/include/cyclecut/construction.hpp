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

#ifndef CYCLECUT_CONSTRUCTION_HPP_
#define CYCLECUT_CONSTRUCTION_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "cyclecut/multigraph.hpp"
#include "cyclecut/reduction.hpp"

namespace cyclecut {

class ScriptError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The starting cycle. A one-node cycle is a single loop, a two-node cycle
// a double edge.
struct InitialCycle {
  std::uint32_t nodes = 0;
  std::vector<std::pair<NodeId, NodeId>> cycle;
};

struct SubdivideStep {
  EdgeId edge;  // id in the graph as it is when the step runs
  bool operator==(const SubdivideStep&) const = default;
};

// Adds a double ear to a path of degree-2 nodes: joins the path's ends by
// a new edge, then duplicates every path edge. A one-node path adds a loop.
struct DoubleEarStep {
  std::vector<NodeId> path;
  bool operator==(const DoubleEarStep&) const = default;
};

using ScriptStep = std::variant<SubdivideStep, DoubleEarStep>;

struct EarScript {
  InitialCycle initial;
  std::vector<ScriptStep> steps;
  std::optional<std::uint64_t> seed;

  std::size_t ear_count() const;
  std::uint64_t expected_c() const { return ear_count() + 1; }
};

std::string script_to_json(const EarScript& s);
EarScript script_from_json(std::string_view text);

// Standard initial cycle on `length` nodes: 0-1, 1-2, ..., (length-1)-0.
InitialCycle cycle_of_length(std::uint32_t length);

struct ScriptGraph {
  Multigraph graph;
  std::uint64_t expected_c = 0;
};

// Replays the script. Throws ScriptError when a step references a missing
// edge or node, or an ear path is not a path of degree-2 nodes.
ScriptGraph apply_script(const EarScript& s);

struct RandomScriptOptions {
  // 0 picks a length uniformly from [1, 6].
  std::uint32_t initial_length = 0;
  // Upper bound on how far an ear extends in each direction from its
  // starting node.
  std::uint32_t max_extension = 24;
};

// Deterministic in (seed, ears, subdivisions, options). When an ear is due
// and no degree-2 node exists, a subdivision is pulled forward from the
// remaining budget or, if the budget is spent, added as an extra step.
EarScript random_script(std::uint64_t seed, std::uint32_t ears, std::uint32_t subdivisions,
                        const RandomScriptOptions& options = {});

// Grows a random script until the replayed graph has at least
// `target_edges` edges. Used by the benchmark.
EarScript random_script_for_edges(std::uint64_t seed, std::size_t target_edges);

struct CycleDecomposition {
  std::vector<std::vector<OrientedEdge>> cycles;
};

// Expands a successful trace of run(g) into one closed walk per cycle.
CycleDecomposition lift_cycles(const Multigraph& g, const ReductionTrace& trace);

// First violation of: partition of the edge set, closed consecutive walks,
// no repeated node within a cycle.
std::optional<std::string> validate_decomposition(const Multigraph& g, const CycleDecomposition& d);

// Rebuilds oriented walks from bare edge-id lists (the form used in JSON
// reports). Lists that do not form walks produce orientations that
// validate_decomposition rejects.
CycleDecomposition orient_cycles(const Multigraph& g, const std::vector<std::vector<EdgeId>>& cycles);

struct EarRecovery {
  EarScript script;
  std::vector<NodeId> node_map;  // replayed node id -> node of g
  std::vector<EdgeId> edge_map;  // edge of g -> replayed edge id
};

// Reads a successful trace backwards as a double ear decomposition of g.
// Replaying `script` yields g up to the two maps.
EarRecovery ear_script_from_trace(const Multigraph& g, const ReductionTrace& trace);

}  // namespace cyclecut

#endif  // CYCLECUT_CONSTRUCTION_HPP_
