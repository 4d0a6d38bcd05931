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

#include "cyclecut/oracle.hpp"

#include <bit>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cyclecut {
namespace {

using Mask = std::uint64_t;

struct Cycle {
  Mask edges = 0;
  std::vector<OrientedEdge> walk;
};

class Solver {
 public:
  explicit Solver(const Multigraph& g) : g_(g), on_path_(g.node_count(), false) {}

  std::size_t best(Mask uncovered) {
    if (uncovered == 0) return 0;
    if (auto it = memo_.find(uncovered); it != memo_.end()) return it->second;
    std::size_t result = ~std::size_t{0};
    for (const Cycle& c : cycles_through_lowest(uncovered)) {
      const std::size_t rest = best(uncovered & ~c.edges);
      if (rest != ~std::size_t{0}) result = std::min(result, rest + 1);
    }
    memo_.emplace(uncovered, result);
    return result;
  }

  // Re-walks the memo table to pick one optimal cycle per level.
  std::vector<std::vector<OrientedEdge>> witness(Mask uncovered) {
    std::vector<std::vector<OrientedEdge>> out;
    while (uncovered != 0) {
      const std::size_t target = best(uncovered);
      bool found = false;
      for (Cycle& c : cycles_through_lowest(uncovered)) {
        if (best(uncovered & ~c.edges) + 1 == target) {
          uncovered &= ~c.edges;
          out.push_back(std::move(c.walk));
          found = true;
          break;
        }
      }
      if (!found) throw OracleError("no cycle decomposition exists");
    }
    return out;
  }

 private:
  std::vector<Cycle> cycles_through_lowest(Mask uncovered) {
    std::vector<Cycle> out;
    const auto e = static_cast<EdgeId>(std::countr_zero(uncovered));
    const Edge& first = g_.edge(e);
    if (first.is_loop()) {
      out.push_back({Mask{1} << e, {{e, first.u, first.u}}});
      return out;
    }
    // Simple paths from first.v back to first.u avoiding e.
    std::vector<OrientedEdge> walk{{e, first.u, first.v}};
    on_path_[first.u] = true;
    on_path_[first.v] = true;
    extend(first.v, first.u, uncovered & ~(Mask{1} << e), Mask{1} << e, walk, out);
    on_path_[first.u] = false;
    on_path_[first.v] = false;
    return out;
  }

  void extend(NodeId at, NodeId target, Mask available, Mask used, std::vector<OrientedEdge>& walk,
              std::vector<Cycle>& out) {
    for (const Incidence& inc : g_.incident(at)) {
      const Mask bit = Mask{1} << inc.edge;
      if (!(available & bit) || inc.neighbor == at) continue;
      if (inc.neighbor == target) {
        walk.push_back({inc.edge, at, target});
        out.push_back({used | bit, walk});
        walk.pop_back();
        continue;
      }
      if (on_path_[inc.neighbor]) continue;
      on_path_[inc.neighbor] = true;
      walk.push_back({inc.edge, at, inc.neighbor});
      extend(inc.neighbor, target, available & ~bit, used | bit, walk, out);
      walk.pop_back();
      on_path_[inc.neighbor] = false;
    }
  }

  const Multigraph& g_;
  std::vector<bool> on_path_;
  std::unordered_map<Mask, std::size_t> memo_;
};

}  // namespace

OracleResult brute_force_c(const Multigraph& g, std::size_t max_edges) {
  if (g.edge_count() > max_edges) {
    throw OracleError("graph has " + std::to_string(g.edge_count()) + " edges, exceeds max-edges " +
                      std::to_string(max_edges));
  }
  if (g.edge_count() > 64) throw OracleError("the oracle supports at most 64 edges");
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) % 2 != 0) {
      throw OracleError("node " + std::to_string(v) + " has odd degree " + std::to_string(g.degree(v)));
    }
  }

  OracleResult result;
  for (const Component& part : connected_components(g)) {
    if (part.graph.edge_count() == 0) {
      throw OracleError("node " + std::to_string(part.nodes.front()) + " has no edges");
    }
    Solver solver(part.graph);
    const Mask all = part.graph.edge_count() == 64 ? ~Mask{0} : (Mask{1} << part.graph.edge_count()) - 1;
    result.c_min += solver.best(all);
    for (auto& walk : solver.witness(all)) {
      for (OrientedEdge& oe : walk) {
        oe = {part.edges[oe.edge], part.nodes[oe.from], part.nodes[oe.to]};
      }
      result.witness.cycles.push_back(std::move(walk));
    }
  }
  return result;
}

namespace {

class Enumerator {
 public:
  Enumerator(std::size_t n, std::size_t max_edges, const std::function<void(const Multigraph&)>& visit)
      : n_(n), max_edges_(max_edges), visit_(visit), degree_(n, 0) {
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u; v < n; ++v) pairs_.emplace_back(u, v);
    }
    mult_.assign(pairs_.size(), 0);
  }

  void run() { choose(0, 0); }

 private:
  void choose(std::size_t i, std::size_t edges) {
    if (i == pairs_.size()) {
      emit();
      return;
    }
    const auto [u, v] = pairs_[i];
    const std::size_t per_copy_u = u == v ? 2 : 1;
    for (std::size_t k = 0;; ++k) {
      if (degree_[u] + k * per_copy_u > 4 || (u != v && degree_[v] + k > 4) || edges + k > max_edges_) break;
      degree_[u] += k * per_copy_u;
      if (u != v) degree_[v] += k;
      mult_[i] = k;
      // (u, n-1) is the last pair touching u.
      const bool u_done = v == n_ - 1;
      if (!u_done || degree_[u] == 2 || degree_[u] == 4) choose(i + 1, edges + k);
      degree_[u] -= k * per_copy_u;
      if (u != v) degree_[v] -= k;
    }
    mult_[i] = 0;
  }

  void emit() {
    Multigraph g(n_);
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      for (std::size_t k = 0; k < mult_[i]; ++k) g.add_edge(pairs_[i].first, pairs_[i].second);
    }
    visit_(g);
  }

  std::size_t n_;
  std::size_t max_edges_;
  const std::function<void(const Multigraph&)>& visit_;
  std::vector<std::size_t> degree_;
  std::vector<std::pair<NodeId, NodeId>> pairs_;
  std::vector<std::size_t> mult_;
};

}  // namespace

void enumerate_even_multigraphs(std::size_t max_nodes, std::size_t max_edges,
                                const std::function<void(const Multigraph&)>& visit) {
  if (max_nodes > kMaxEnumerationNodes || max_edges > kMaxEnumerationEdges) {
    throw OracleError("enumeration bounds exceeded (at most " + std::to_string(kMaxEnumerationNodes) +
                      " nodes and " + std::to_string(kMaxEnumerationEdges) + " edges)");
  }
  for (std::size_t n = 1; n <= max_nodes; ++n) Enumerator(n, max_edges, visit).run();
}

}  // namespace cyclecut
