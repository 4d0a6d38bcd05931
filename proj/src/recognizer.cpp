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

#include "cyclecut/recognizer.hpp"

#include <unordered_set>
#include <vector>

namespace cyclecut {

DegreeCheck degrees_in_2_4(const Multigraph& g) {
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const std::size_t d = g.degree(v);
    if (d != 2 && d != 4) return {false, v, d};
  }
  return {};
}

bool treewidth_at_most_2(const Multigraph& g) {
  const std::size_t n = g.node_count();
  // Loops never matter for minors of treewidth <= 2 and parallel edges
  // collapse, so work on the simple graph.
  std::vector<std::unordered_set<NodeId>> adj(n);
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }

  std::vector<bool> alive(n, true);
  std::vector<NodeId> work;
  for (NodeId v = 0; v < n; ++v) {
    if (adj[v].size() <= 2) work.push_back(v);
  }
  std::size_t remaining = n;
  auto queue_if_small = [&](NodeId v) {
    if (adj[v].size() <= 2) work.push_back(v);
  };

  while (!work.empty()) {
    const NodeId v = work.back();
    work.pop_back();
    if (!alive[v] || adj[v].size() > 2) continue;
    alive[v] = false;
    --remaining;
    std::vector<NodeId> nbrs(adj[v].begin(), adj[v].end());
    adj[v].clear();
    for (NodeId x : nbrs) adj[x].erase(v);
    if (nbrs.size() == 2) {
      // Suppress: the new edge a-b may already exist, lowering both degrees.
      const NodeId a = nbrs[0];
      const NodeId b = nbrs[1];
      adj[a].insert(b);
      adj[b].insert(a);
    }
    for (NodeId x : nbrs) queue_if_small(x);
  }
  return remaining == 0;
}

RecognitionReport is_double_ear_decomposable(const Multigraph& g) {
  RecognitionReport r;
  r.degrees = degrees_in_2_4(g);
  r.connected = is_connected(g);
  r.treewidth_le2 = treewidth_at_most_2(g);
  r.verdict = r.degrees.ok && r.connected && r.treewidth_le2;
  return r;
}

}  // namespace cyclecut
