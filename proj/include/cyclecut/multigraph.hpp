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

#ifndef CYCLECUT_MULTIGRAPH_HPP_
#define CYCLECUT_MULTIGRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cyclecut {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr NodeId kNoNode = ~NodeId{0};
inline constexpr EdgeId kNoEdge = ~EdgeId{0};

// Thrown for contract violations on graph operations (unknown ids, bad
// resolve targets, ...).
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown by parse_graph; `line()` is the 1-based input line of the problem.
class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  bool is_loop() const { return u == v; }
  NodeId other(NodeId x) const { return x == u ? v : u; }
};

struct Incidence {
  NodeId neighbor;
  EdgeId edge;
};

// Undirected multigraph with loops and parallel edges. Edge ids are dense
// and follow insertion order. A loop shows up twice in its node's incidence
// list, so degree(v) == incident(v).size().
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(std::size_t node_count);

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  NodeId add_node();
  EdgeId add_edge(NodeId u, NodeId v);

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Incidence> incident(NodeId v) const { return adjacency_[v]; }
  std::size_t degree(NodeId v) const { return adjacency_[v].size(); }
  std::size_t max_degree() const;

  bool operator==(const Multigraph& other) const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

// Edge-list text format: '#' comment lines and blank lines are skipped, the
// first data line is "n m", followed by exactly m lines "u v".
Multigraph parse_graph(std::string_view text);
std::string serialize_graph(const Multigraph& g);

std::size_t degree(const Multigraph& g, NodeId v);

struct Component {
  Multigraph graph;
  std::vector<NodeId> nodes;  // local node id -> id in the source graph
  std::vector<EdgeId> edges;  // local edge id -> id in the source graph
};

// Components are ordered by their smallest node; local ids preserve the
// relative order of the source ids.
std::vector<Component> connected_components(const Multigraph& g);
bool is_connected(const Multigraph& g);

// Replaces e = (u, w) by u - x - w through a fresh node x = node_count().
// Edge e keeps its id for the (u, x) half; (x, w) gets id edge_count().
Multigraph subdivide(const Multigraph& g, EdgeId e);

// Inverse of subdivide. v must have degree 2, no loop, and must not be the
// last node. The merged edge takes the smaller of v's two edge ids; the
// larger id and v itself are removed and higher ids shift down by one.
Multigraph resolve(const Multigraph& g, NodeId v);

}  // namespace cyclecut

#endif  // CYCLECUT_MULTIGRAPH_HPP_
