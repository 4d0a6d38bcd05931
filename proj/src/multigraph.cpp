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

#include "cyclecut/multigraph.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <string>

namespace cyclecut {

ParseError::ParseError(std::size_t line, const std::string& what)
    : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}

Multigraph::Multigraph(std::size_t node_count) : adjacency_(node_count) {}

NodeId Multigraph::add_node() {
  adjacency_.emplace_back();
  return static_cast<NodeId>(adjacency_.size() - 1);
}

EdgeId Multigraph::add_edge(NodeId u, NodeId v) {
  if (u >= node_count() || v >= node_count()) {
    throw GraphError("add_edge: node out of range");
  }
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({u, v});
  adjacency_[u].push_back({v, id});
  adjacency_[v].push_back({u, id});
  return id;
}

std::size_t Multigraph::max_degree() const {
  std::size_t best = 0;
  for (const auto& adj : adjacency_) best = std::max(best, adj.size());
  return best;
}

bool Multigraph::operator==(const Multigraph& other) const {
  if (node_count() != other.node_count() || edge_count() != other.edge_count()) {
    return false;
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].u != other.edges_[i].u || edges_[i].v != other.edges_[i].v) {
      return false;
    }
  }
  return true;
}

namespace {

// Splits a line into whitespace separated tokens.
std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t parse_uint(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Multigraph parse_graph(std::string_view text) {
  Multigraph g;
  bool have_header = false;
  std::uint64_t expected_edges = 0;
  std::size_t line_no = 0;
  std::size_t last_line = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    last_line = line_no;

    const auto tokens = tokenize(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() != 2) {
      throw ParseError(line_no, have_header ? "expected \"u v\"" : "expected header \"n m\"");
    }
    const std::uint64_t a = parse_uint(tokens[0], line_no);
    const std::uint64_t b = parse_uint(tokens[1], line_no);
    if (!have_header) {
      if (a > std::numeric_limits<NodeId>::max() - 1 || b > std::numeric_limits<EdgeId>::max() - 1) {
        throw ParseError(line_no, "header values too large");
      }
      g = Multigraph(static_cast<std::size_t>(a));
      expected_edges = b;
      have_header = true;
      continue;
    }
    if (g.edge_count() == expected_edges) {
      throw ParseError(line_no, "wrong edge count: more than " + std::to_string(expected_edges) +
                                    " edge lines");
    }
    if (a >= g.node_count() || b >= g.node_count()) {
      throw ParseError(line_no, "node index out of range (n = " + std::to_string(g.node_count()) + ")");
    }
    g.add_edge(static_cast<NodeId>(a), static_cast<NodeId>(b));
  }
  if (!have_header) throw ParseError(std::max<std::size_t>(last_line, 1), "missing header \"n m\"");
  if (g.edge_count() != expected_edges) {
    throw ParseError(last_line, "wrong edge count: header says " + std::to_string(expected_edges) +
                                    ", found " + std::to_string(g.edge_count()));
  }
  return g;
}

std::string serialize_graph(const Multigraph& g) {
  std::string out;
  out.reserve(16 + g.edge_count() * 12);
  out += std::to_string(g.node_count());
  out += ' ';
  out += std::to_string(g.edge_count());
  out += '\n';
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

std::size_t degree(const Multigraph& g, NodeId v) {
  if (v >= g.node_count()) throw GraphError("degree: node out of range");
  return g.degree(v);
}

namespace {

// Component label per node, labels assigned in order of smallest node.
std::vector<std::uint32_t> label_components(const Multigraph& g, std::uint32_t* count) {
  constexpr auto kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> label(g.node_count(), kUnset);
  std::vector<NodeId> stack;
  std::uint32_t next = 0;
  for (NodeId s = 0; s < g.node_count(); ++s) {
    if (label[s] != kUnset) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const NodeId x = stack.back();
      stack.pop_back();
      for (const Incidence& inc : g.incident(x)) {
        if (label[inc.neighbor] == kUnset) {
          label[inc.neighbor] = next;
          stack.push_back(inc.neighbor);
        }
      }
    }
    ++next;
  }
  *count = next;
  return label;
}

}  // namespace

std::vector<Component> connected_components(const Multigraph& g) {
  std::uint32_t count = 0;
  const auto label = label_components(g, &count);
  std::vector<Component> parts(count);
  std::vector<NodeId> local(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    Component& c = parts[label[v]];
    local[v] = static_cast<NodeId>(c.nodes.size());
    c.nodes.push_back(v);
  }
  for (Component& c : parts) c.graph = Multigraph(c.nodes.size());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    Component& c = parts[label[edge.u]];
    c.graph.add_edge(local[edge.u], local[edge.v]);
    c.edges.push_back(e);
  }
  return parts;
}

bool is_connected(const Multigraph& g) {
  std::uint32_t count = 0;
  label_components(g, &count);
  return count == 1;
}

Multigraph subdivide(const Multigraph& g, EdgeId e) {
  if (e >= g.edge_count()) throw GraphError("subdivide: unknown edge " + std::to_string(e));
  Multigraph out(g.node_count() + 1);
  const auto x = static_cast<NodeId>(g.node_count());
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    const Edge& edge = g.edge(i);
    if (i == e) {
      out.add_edge(edge.u, x);
    } else {
      out.add_edge(edge.u, edge.v);
    }
  }
  out.add_edge(x, g.edge(e).v);
  return out;
}

Multigraph resolve(const Multigraph& g, NodeId v) {
  if (v >= g.node_count()) throw GraphError("resolve: unknown node " + std::to_string(v));
  if (g.degree(v) != 2) {
    throw GraphError("resolve: node " + std::to_string(v) + " has degree " +
                     std::to_string(g.degree(v)) + ", expected 2");
  }
  const auto inc = g.incident(v);
  if (inc[0].edge == inc[1].edge) throw GraphError("resolve: node " + std::to_string(v) + " carries a loop");
  if (g.node_count() < 2) throw GraphError("resolve: cannot resolve the last node");

  const EdgeId keep = std::min(inc[0].edge, inc[1].edge);
  const EdgeId drop = std::max(inc[0].edge, inc[1].edge);
  const NodeId a = g.edge(keep).other(v);
  const NodeId b = g.edge(drop).other(v);
  auto shift = [v](NodeId x) { return x > v ? x - 1 : x; };

  Multigraph out(g.node_count() - 1);
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    if (i == drop) continue;
    if (i == keep) {
      out.add_edge(shift(a), shift(b));
    } else {
      out.add_edge(shift(g.edge(i).u), shift(g.edge(i).v));
    }
  }
  return out;
}

}  // namespace cyclecut
