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

#include "cyclecut/reduction.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace cyclecut {

int cycle_contribution(const ReductionStep& step) {
  struct Visitor {
    int operator()(const LoopRemoved&) const { return 1; }
    int operator()(const FinalLoop&) const { return 1; }
    int operator()(const DoubleEdgePath&) const { return 1; }
    int operator()(const TripleEdge&) const { return 1; }
    int operator()(const QuadrupleEdge&) const { return 2; }
    int operator()(const Resolved&) const { return 0; }
  };
  return std::visit(Visitor{}, step);
}

std::vector<OrientedEdge> ReductionTrace::expand(RecordId record, NodeId start) const {
  std::vector<OrientedEdge> out;
  expand_into(record, start, out);
  return out;
}

void ReductionTrace::expand_into(RecordId record, NodeId start,
                                 std::vector<OrientedEdge>& out) const {
  // Concatenation trees can be as deep as a subdivided chain is long, so
  // this walks them with an explicit stack.
  std::vector<std::pair<RecordId, NodeId>> stack{{record, start}};
  while (!stack.empty()) {
    const auto [r, s] = stack.back();
    stack.pop_back();
    if (r >= records.size()) throw std::out_of_range("expand: unknown record");
    const CopyRecord& cr = records[r];
    if (s != cr.end_a && s != cr.end_b) {
      throw std::logic_error("expand: record " + std::to_string(r) + " does not touch node " +
                             std::to_string(s));
    }
    const NodeId other = s == cr.end_a ? cr.end_b : cr.end_a;
    if (cr.leaf) {
      out.push_back({cr.via_or_edge, s, other});
      continue;
    }
    const NodeId via = cr.via_or_edge;
    if (s == cr.end_a) {
      stack.emplace_back(cr.right, via);
      stack.emplace_back(cr.left, s);
    } else {
      stack.emplace_back(cr.left, via);
      stack.emplace_back(cr.right, s);
    }
  }
}

// ---------------------------------------------------------------------------
// list bookkeeping

WorkState::IndexedList& WorkState::list_for(ListTag tag) {
  switch (tag) {
    case ListTag::kV2: return v2_;
    case ListTag::kV4: return v4_;
    case ListTag::kE2: return e2_;
    case ListTag::kE3: return e3_;
    case ListTag::kE4: return e4_;
    case ListTag::kLoop: return loops_;
    case ListTag::kNone: break;
  }
  throw std::logic_error("list_for: no list");
}

void WorkState::list_insert(ListTag tag, std::uint32_t item, ListTag& slot_tag,
                            std::uint32_t& slot_pos) {
  IndexedList& list = list_for(tag);
  slot_tag = tag;
  slot_pos = static_cast<std::uint32_t>(list.items.size());
  list.items.push_back(item);
}

void WorkState::list_erase(ListTag& slot_tag, std::uint32_t& slot_pos) {
  if (slot_tag == ListTag::kNone) return;
  const bool node_list = slot_tag == ListTag::kV2 || slot_tag == ListTag::kV4;
  IndexedList& list = list_for(slot_tag);
  const std::uint32_t moved = list.items.back();
  list.items[slot_pos] = moved;
  if (node_list) {
    nodes_[moved].list_pos = slot_pos;
  } else {
    bundles_[moved].list_pos = slot_pos;
  }
  list.items.pop_back();
  slot_tag = ListTag::kNone;
}

void WorkState::relist_node(NodeId v) {
  Node& n = nodes_[v];
  ListTag want = ListTag::kNone;
  if (n.alive && n.degree == 2) want = ListTag::kV2;
  if (n.alive && n.degree == 4) want = ListTag::kV4;
  if (want == n.list) return;
  list_erase(n.list, n.list_pos);
  if (want != ListTag::kNone) list_insert(want, v, n.list, n.list_pos);
}

void WorkState::relist_bundle(BundleId b) {
  Bundle& bd = bundles_[b];
  if (bd.weight != 2) bd.deferred = false;
  ListTag want = ListTag::kNone;
  if (bd.weight > 0 && bd.a == bd.b) {
    want = ListTag::kLoop;
  } else if (bd.weight == 2 && !bd.deferred) {
    want = ListTag::kE2;
  } else if (bd.weight == 3) {
    want = ListTag::kE3;
  } else if (bd.weight == 4) {
    want = ListTag::kE4;
  }
  if (want == bd.list) return;
  list_erase(bd.list, bd.list_pos);
  if (want != ListTag::kNone) list_insert(want, b, bd.list, bd.list_pos);
}

// ---------------------------------------------------------------------------
// bundles

BundleId WorkState::find_bundle(NodeId u, NodeId w) const {
  const Node& n = nodes_[u];
  for (std::uint8_t i = 0; i < n.bundle_count; ++i) {
    if (n.neighbors[i] == w) return n.bundles[i];
  }
  return kNoBundle;
}

BundleId WorkState::new_bundle(NodeId u, NodeId w) {
  Bundle bd;
  bd.a = u;
  bd.b = w;
  BundleId id;
  // Recycling slots keeps the bundle array at O(m) and its hot part small.
  if (!free_bundles_.empty()) {
    id = free_bundles_.back();
    free_bundles_.pop_back();
    bundles_[id] = bd;
  } else {
    id = static_cast<BundleId>(bundles_.size());
    bundles_.push_back(bd);
  }
  attach(u, id);
  if (u != w) attach(w, id);
  return id;
}

void WorkState::attach(NodeId v, BundleId b) {
  Node& n = nodes_[v];
  if (n.bundle_count == n.bundles.size()) {
    throw std::logic_error("node " + std::to_string(v) + " has more than four incident bundles");
  }
  const Bundle& bd = bundles_[b];
  n.neighbors[n.bundle_count] = bd.a == v ? bd.b : bd.a;
  n.bundles[n.bundle_count++] = b;
}

void WorkState::detach(NodeId v, BundleId b) {
  Node& n = nodes_[v];
  for (std::uint8_t i = 0; i < n.bundle_count; ++i) {
    if (n.bundles[i] == b) {
      n.bundles[i] = n.bundles[n.bundle_count - 1];
      n.neighbors[i] = n.neighbors[n.bundle_count - 1];
      n.bundles[n.bundle_count - 1] = kNoBundle;
      --n.bundle_count;
      return;
    }
  }
}

void WorkState::push_copy(BundleId b, RecordId r) {
  Bundle& bd = bundles_[b];
  if (bd.weight == bd.copies.size()) {
    throw std::logic_error("bundle weight would exceed four");
  }
  bd.copies[bd.weight++] = r;
}

RecordId WorkState::pop_copy(BundleId b) {
  Bundle& bd = bundles_[b];
  return bd.copies[--bd.weight];
}

void WorkState::drop_bundle_if_empty(BundleId b) {
  Bundle& bd = bundles_[b];
  if (bd.weight != 0) return;
  detach(bd.a, b);
  if (bd.a != bd.b) detach(bd.b, b);
  relist_bundle(b);
  free_bundles_.push_back(b);
}

std::size_t WorkState::distinct_neighbors(NodeId v) const { return nodes_[v].bundle_count; }

// A deferred path stays stuck while its endpoint keeps one double bundle
// into the path plus two single non-loop bundles, none towards the partner.
bool WorkState::still_stuck(NodeId v, NodeId partner) const {
  const Node& n = nodes_[v];
  if (!n.alive || n.degree != 4 || n.bundle_count != 3) return false;
  for (std::uint8_t i = 0; i < n.bundle_count; ++i) {
    const Bundle& bd = bundles_[n.bundles[i]];
    if (bd.a == bd.b) return false;
    if (bd.weight == 2 && !bd.deferred) return false;
  }
  const BundleId to_partner = find_bundle(v, partner);
  return to_partner == kNoBundle || bundles_[to_partner].deferred;
}

void WorkState::touch(NodeId v) {
  Node& n = nodes_[v];
  if (n.stuck_seed == kNoBundle) return;
  const NodeId partner = n.stuck_partner;
  const BundleId seed = n.stuck_seed;
  if (still_stuck(v, partner)) return;
  n.stuck_seed = kNoBundle;
  n.stuck_partner = kNoNode;
  if (partner != kNoNode && nodes_[partner].stuck_seed == seed) {
    nodes_[partner].stuck_seed = kNoBundle;
    nodes_[partner].stuck_partner = kNoNode;
  }
  Bundle& bd = bundles_[seed];
  if (bd.deferred && bd.weight == 2) {
    bd.deferred = false;
    relist_bundle(seed);
  }
}

// ---------------------------------------------------------------------------
// construction

std::vector<WorkState::FlatNode> WorkState::flatten(const Multigraph& g) {
  const std::size_t n = g.node_count();
  for (NodeId v = 0; v < n; ++v) {
    if (g.degree(v) > 4) {
      throw GraphError("init: node " + std::to_string(v) + " has degree " +
                       std::to_string(g.degree(v)) + " > 4");
    }
  }
  std::vector<FlatNode> a(n);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    FlatNode& x = a[edge.u];
    x.neighbor[x.degree] = edge.v;
    x.edge[x.degree++] = e;
    FlatNode& y = a[edge.v];
    y.neighbor[y.degree] = edge.u;
    y.edge[y.degree++] = e;
  }
  return a;
}

WorkState WorkState::init(const Multigraph& g, std::span<const NodeId> order) {
  return build(g, order, flatten(g));
}

WorkState WorkState::build(const Multigraph& g, std::span<const NodeId> order,
                           std::span<const FlatNode> adjacency) {
  WorkState s;
  const std::size_t n = g.node_count();
  const std::size_t m = g.edge_count();
  std::vector<NodeId> local;
  if (!order.empty()) {
    if (order.size() != n) throw GraphError("init: node order has the wrong length");
    s.to_orig_.assign(order.begin(), order.end());
    local.assign(n, kNoNode);
    for (NodeId i = 0; i < n; ++i) {
      if (order[i] >= n || local[order[i]] != kNoNode) throw GraphError("init: node order is not a permutation");
      local[order[i]] = i;
    }
  }

  s.nodes_.resize(n);
  s.live_nodes_ = n;
  s.live_copies_ = m;
  s.trace_.original_nodes = n;
  s.trace_.original_edges = m;
  s.trace_.records.reserve(m + n);
  s.trace_.steps.reserve(n + m / 2);
  s.trace_.path_nodes.reserve(m);
  s.trace_.path_records.reserve(m);
  s.bundles_.reserve(m);
  s.v2_.items.reserve(n);
  s.v4_.items.reserve(n);
  s.e2_.items.reserve(m / 2);
  s.e3_.items.reserve(m / 3);
  s.e4_.items.reserve(m / 4);
  s.loops_.items.reserve(m);
  for (EdgeId e = 0; e < m; ++e) {
    const Edge& edge = g.edge(e);
    CopyRecord leaf;
    leaf.end_a = edge.u;
    leaf.end_b = edge.v;
    leaf.via_or_edge = e;
    leaf.leaf = true;
    s.trace_.records.push_back(leaf);
  }
  // Bundles are built node by node in state order, each from its lower end,
  // so consecutive state nodes get nearby bundle slots.
  for (NodeId i = 0; i < n; ++i) {
    const FlatNode& x = adjacency[s.orig(i)];
    s.nodes_[i].degree = x.degree;
    for (std::size_t k = 0; k < x.degree; ++k) {
      const NodeId j = local.empty() ? x.neighbor[k] : local[x.neighbor[k]];
      if (j < i) continue;
      if (j == i) {
        // A loop is listed twice.
        bool repeat = false;
        for (std::size_t t = 0; t < k; ++t) repeat = repeat || x.edge[t] == x.edge[k];
        if (repeat) continue;
      }
      BundleId b = s.find_bundle(i, j);
      if (b == kNoBundle) b = s.new_bundle(i, j);
      s.push_copy(b, x.edge[k]);
    }
  }
  for (NodeId v = 0; v < n; ++v) s.relist_node(v);
  for (BundleId b = 0; b < s.bundles_.size(); ++b) s.relist_bundle(b);
  return s;
}

// ---------------------------------------------------------------------------
// reductions

StepResult WorkState::step_loop() {
  if (finished_ || loops_.items.empty()) return StepResult::kNotApplicable;
  const BundleId b = loops_.items.back();
  const NodeId x = bundles_[b].a;
  const RecordId r = pop_copy(b);
  --live_copies_;
  nodes_[x].degree = static_cast<std::uint8_t>(nodes_[x].degree - 2);
  drop_bundle_if_empty(b);
  relist_bundle(b);
  relist_node(x);
  ++c_;
  if (live_copies_ == 0) {
    trace_.steps.emplace_back(FinalLoop{orig(x), r});
    finished_ = true;
  } else {
    trace_.steps.emplace_back(LoopRemoved{orig(x), r});
    touch(x);
  }
  return StepResult::kApplied;
}

StepResult WorkState::step_resolve() {
  if (finished_ || v2_.items.empty() || live_nodes_ <= 1) return StepResult::kNotApplicable;
  // Following the chain just worked on keeps the touched memory hot; any
  // degree-2 node is a valid choice.
  NodeId v = v2_.items.back();
  if (resolve_hint_ != kNoNode && nodes_[resolve_hint_].list == ListTag::kV2) v = resolve_hint_;
  resolve_hint_ = kNoNode;
  Node& nv = nodes_[v];

  RecordId r1 = 0;
  RecordId r2 = 0;
  NodeId u = kNoNode;
  NodeId w = kNoNode;
  if (nv.bundle_count == 1) {
    const BundleId b = nv.bundles[0];
    if (nv.neighbors[0] == v) throw std::logic_error("resolve: node carries a loop");
    u = w = nv.neighbors[0];
    r2 = pop_copy(b);
    r1 = pop_copy(b);
  } else if (nv.bundle_count == 2) {
    const BundleId b1 = nv.bundles[0];
    const BundleId b2 = nv.bundles[1];
    if (nv.neighbors[0] == v || nv.neighbors[1] == v) throw std::logic_error("resolve: node carries a loop");
    u = nv.neighbors[0];
    w = nv.neighbors[1];
    r1 = pop_copy(b1);
    r2 = pop_copy(b2);
  } else {
    throw std::logic_error("resolve: degree-2 node with unexpected bundle count");
  }
  // Every bundle at v is now empty.
  while (nv.bundle_count > 0) {
    const BundleId b = nv.bundles[0];
    drop_bundle_if_empty(b);
    relist_bundle(b);
  }
  nv.alive = false;
  nv.degree = 0;
  relist_node(v);
  --live_nodes_;

  CopyRecord merged;
  merged.end_a = orig(u);
  merged.end_b = orig(w);
  merged.left = r1;
  merged.right = r2;
  merged.via_or_edge = orig(v);
  merged.leaf = false;
  const auto rid = static_cast<RecordId>(trace_.records.size());
  trace_.records.push_back(merged);

  BundleId target = find_bundle(u, w);
  if (target == kNoBundle) target = new_bundle(u, w);
  push_copy(target, rid);
  --live_copies_;
  relist_bundle(target);
  trace_.steps.emplace_back(Resolved{orig(v), rid});
  touch(u);
  if (w != u) touch(w);
  if (nodes_[u].list == ListTag::kV2) {
    resolve_hint_ = u;
  } else if (nodes_[w].list == ListTag::kV2) {
    resolve_hint_ = w;
  }
  return StepResult::kApplied;
}

StepResult WorkState::step_quadruple() {
  if (finished_ || e4_.items.empty()) return StepResult::kNotApplicable;
  const BundleId b = e4_.items.back();
  Bundle& bd = bundles_[b];
  if (live_nodes_ != 2 || live_copies_ != 4) {
    failure_ = "quadruple edge between " + std::to_string(orig(bd.a)) + " and " + std::to_string(orig(bd.b)) +
               " is not the whole graph";
    return StepResult::kFailed;
  }
  const NodeId u = bd.a;
  const NodeId w = bd.b;
  QuadrupleEdge step{orig(u), orig(w), bd.copies};
  bd.weight = 0;
  drop_bundle_if_empty(b);
  nodes_[u].degree = 0;
  nodes_[w].degree = 0;
  relist_node(u);
  relist_node(w);
  live_copies_ = 0;
  c_ += 2;
  trace_.steps.emplace_back(step);
  finished_ = true;
  return StepResult::kApplied;
}

StepResult WorkState::step_triple() {
  if (finished_ || e3_.items.empty()) return StepResult::kNotApplicable;
  const BundleId b = e3_.items.back();
  const NodeId u = bundles_[b].a;
  const NodeId w = bundles_[b].b;
  if (u == w) throw std::logic_error("triple: weight-3 loop bundle");
  TripleEdge step{orig(u), orig(w), {}};
  step.removed[1] = pop_copy(b);
  step.removed[0] = pop_copy(b);
  live_copies_ -= 2;
  relist_bundle(b);
  nodes_[u].degree = static_cast<std::uint8_t>(nodes_[u].degree - 2);
  nodes_[w].degree = static_cast<std::uint8_t>(nodes_[w].degree - 2);
  relist_node(u);
  relist_node(w);
  ++c_;
  trace_.steps.emplace_back(step);
  touch(u);
  touch(w);
  return StepResult::kApplied;
}

StepResult WorkState::step_double() {
  if (finished_) return StepResult::kNotApplicable;
  std::vector<NodeId>& side = scratch_nodes_;
  std::vector<BundleId>& side_bundles = scratch_bundles_;

  while (!e2_.items.empty()) {
    const BundleId seed = e2_.items.back();
    const NodeId u = bundles_[seed].a;
    const NodeId v = bundles_[seed].b;

    // Grows the path from `start`, which was entered through `from`. The
    // visited markers stop a doubled cycle from wrapping onto itself.
    auto extend = [this](NodeId start, BundleId from, std::vector<NodeId>& out_nodes,
                         std::vector<BundleId>& out_bundles) {
      NodeId x = start;
      for (;;) {
        const Node& nx = nodes_[x];
        if (nx.bundle_count != 2) break;
        const int k = nx.bundles[0] == from ? 1 : 0;
        const BundleId other = nx.bundles[k];
        const NodeId y = nx.neighbors[k];
        if (y == x || bundles_[other].weight != 2) break;
        if (nodes_[y].visited) break;
        nodes_[y].visited = true;
        out_nodes.push_back(y);
        out_bundles.push_back(other);
        x = y;
        from = other;
      }
    };

    nodes_[u].visited = true;
    nodes_[v].visited = true;
    std::vector<NodeId>& path_nodes = path_nodes_;
    std::vector<BundleId>& path_bundles = path_bundles_;
    path_nodes.clear();
    path_bundles.clear();
    side.clear();
    side_bundles.clear();
    extend(u, seed, side, side_bundles);
    path_nodes.assign(side.rbegin(), side.rend());
    path_bundles.assign(side_bundles.rbegin(), side_bundles.rend());
    path_nodes.push_back(u);
    path_nodes.push_back(v);
    path_bundles.push_back(seed);
    side.clear();
    side_bundles.clear();
    extend(v, seed, side, side_bundles);
    path_nodes.insert(path_nodes.end(), side.begin(), side.end());
    path_bundles.insert(path_bundles.end(), side_bundles.begin(), side_bundles.end());
    for (NodeId x : path_nodes) nodes_[x].visited = false;

    const NodeId v0 = path_nodes.front();
    const NodeId vl = path_nodes.back();
    const BundleId closing = path_bundles.size() >= 2 ? find_bundle(v0, vl) : kNoBundle;
    if (closing == kNoBundle) {
      for (BundleId b : path_bundles) {
        bundles_[b].deferred = true;
        relist_bundle(b);
      }
      nodes_[v0].stuck_seed = seed;
      nodes_[v0].stuck_partner = vl;
      nodes_[vl].stuck_seed = seed;
      nodes_[vl].stuck_partner = v0;
      ++deferrals_;
      continue;
    }

    DoubleEdgePath step;
    step.node_offset = static_cast<std::uint32_t>(trace_.path_nodes.size());
    step.record_offset = static_cast<std::uint32_t>(trace_.path_records.size());
    step.length = static_cast<std::uint32_t>(path_bundles.size());
    for (BundleId b : path_bundles) {
      trace_.path_records.push_back(pop_copy(b));
      relist_bundle(b);
    }
    step.closing = pop_copy(closing);
    drop_bundle_if_empty(closing);
    relist_bundle(closing);
    live_copies_ -= path_bundles.size() + 1;
    for (NodeId x : path_nodes) {
      nodes_[x].degree = static_cast<std::uint8_t>(nodes_[x].degree - 2);
      relist_node(x);
    }
    for (NodeId x : path_nodes) touch(x);
    for (NodeId x : path_nodes) trace_.path_nodes.push_back(orig(x));
    ++c_;
    trace_.steps.emplace_back(step);
    return StepResult::kApplied;
  }
  return StepResult::kNotApplicable;
}

// ---------------------------------------------------------------------------
// audit

std::optional<std::string> WorkState::audit() const {
  auto fail = [](const std::string& s) { return std::optional<std::string>(s); };
  std::size_t alive = 0;
  std::size_t copies = 0;
  for (NodeId v = 0; v < nodes_.size(); ++v) {
    const Node& n = nodes_[v];
    if (n.visited) return fail("node " + std::to_string(v) + " left visited");
    if (!n.alive) {
      if (n.list != ListTag::kNone) return fail("dead node " + std::to_string(v) + " still listed");
      continue;
    }
    ++alive;
    std::size_t deg = 0;
    for (std::uint8_t i = 0; i < n.bundle_count; ++i) {
      const Bundle& bd = bundles_[n.bundles[i]];
      if (bd.a != v && bd.b != v) return fail("node " + std::to_string(v) + " holds a foreign bundle");
      if (n.neighbors[i] != (bd.a == v ? bd.b : bd.a)) {
        return fail("node " + std::to_string(v) + " has a stale neighbour entry");
      }
      deg += bd.a == bd.b ? 2u * bd.weight : bd.weight;
    }
    if (deg != n.degree) {
      return fail("node " + std::to_string(v) + " degree " + std::to_string(n.degree) +
                  " but bundles sum to " + std::to_string(deg));
    }
    const ListTag want = n.degree == 2 ? ListTag::kV2 : n.degree == 4 ? ListTag::kV4 : ListTag::kNone;
    if (n.list != want) return fail("node " + std::to_string(v) + " in wrong degree list");
    if (want == ListTag::kV2 && (n.list_pos >= v2_.items.size() || v2_.items[n.list_pos] != v)) {
      return fail("V2 back-pointer broken at node " + std::to_string(v));
    }
    if (want == ListTag::kV4 && (n.list_pos >= v4_.items.size() || v4_.items[n.list_pos] != v)) {
      return fail("V4 back-pointer broken at node " + std::to_string(v));
    }
  }
  if (alive != live_nodes_) return fail("live node count mismatch");
  for (BundleId b = 0; b < bundles_.size(); ++b) {
    const Bundle& bd = bundles_[b];
    copies += bd.weight;
    ListTag want = ListTag::kNone;
    if (bd.weight > 0 && bd.a == bd.b) {
      want = ListTag::kLoop;
    } else if (bd.weight == 2 && !bd.deferred) {
      want = ListTag::kE2;
    } else if (bd.weight == 3) {
      want = ListTag::kE3;
    } else if (bd.weight == 4) {
      want = ListTag::kE4;
    }
    if (bd.list != want) return fail("bundle " + std::to_string(b) + " in wrong weight list");
    if (want != ListTag::kNone) {
      const auto& list = const_cast<WorkState*>(this)->list_for(want).items;
      if (bd.list_pos >= list.size() || list[bd.list_pos] != b) {
        return fail("bundle " + std::to_string(b) + " back-pointer broken");
      }
    }
    if (bd.weight > 0) {
      const bool at_a = std::find(nodes_[bd.a].bundles.begin(), nodes_[bd.a].bundles.end(), b) !=
                        nodes_[bd.a].bundles.end();
      const bool at_b = std::find(nodes_[bd.b].bundles.begin(), nodes_[bd.b].bundles.end(), b) !=
                        nodes_[bd.b].bundles.end();
      if (!at_a || !at_b) return fail("bundle " + std::to_string(b) + " not attached to its ends");
      for (std::uint8_t i = 0; i < bd.weight; ++i) {
        const CopyRecord& cr = trace_.records[bd.copies[i]];
        const NodeId a = orig(bd.a);
        const NodeId b2 = orig(bd.b);
        const bool same = (cr.end_a == a && cr.end_b == b2) || (cr.end_a == b2 && cr.end_b == a);
        if (!same) return fail("bundle " + std::to_string(b) + " holds a record with other ends");
      }
    }
  }
  if (copies != live_copies_) return fail("live copy count mismatch");
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// drivers

namespace {

NotDecomposable degree_failure(NodeId v, std::size_t deg) {
  NotDecomposable f;
  f.kind = FailureKind::kDegree;
  f.node = v;
  f.degree = deg;
  f.reason = "degree " + std::to_string(deg) + " at node " + std::to_string(v);
  return f;
}

}  // namespace

DecompositionResult run(const Multigraph& g) {
  if (g.node_count() == 0) return NotDecomposable{FailureKind::kEmptyGraph, kNoNode, 0, "empty graph"};
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const std::size_t d = g.degree(v);
    if (d != 2 && d != 4) return degree_failure(v, d);
  }
  // The connectivity check doubles as a breadth-first numbering; running
  // the reductions on it keeps neighbouring nodes close in memory.
  const auto adj = WorkState::flatten(g);
  std::vector<NodeId> order;
  order.reserve(g.node_count());
  std::vector<bool> seen(g.node_count(), false);
  order.push_back(0);
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& x = adj[order[i]];
    for (std::size_t k = 0; k < x.degree; ++k) {
      const NodeId w = x.neighbor[k];
      if (!seen[w]) {
        seen[w] = true;
        order.push_back(w);
      }
    }
  }
  if (order.size() != g.node_count()) {
    return NotDecomposable{FailureKind::kDisconnected, kNoNode, 0, "graph is disconnected"};
  }

  WorkState s = WorkState::build(g, order, adj);
  while (!s.finished()) {
    if (s.step_loop() == StepResult::kApplied) continue;
    if (s.step_resolve() == StepResult::kApplied) continue;
    const StepResult quad = s.step_quadruple();
    if (quad == StepResult::kFailed) {
      return NotDecomposable{FailureKind::kQuadrupleNotWhole, kNoNode, 0, s.failure_reason()};
    }
    if (quad == StepResult::kApplied) continue;
    if (s.step_triple() == StepResult::kApplied) continue;
    if (s.step_double() == StepResult::kApplied) continue;
    std::string reason = "no reduction applies (" + std::to_string(s.live_nodes()) +
                         " nodes of degree 4 left";
    if (s.deferred_paths() > 0) reason += ", every double-edge path has non-adjacent ends";
    reason += ")";
    return NotDecomposable{FailureKind::kStuck, kNoNode, 0, std::move(reason)};
  }
  return Decomposable{s.cycles(), s.take_trace()};
}

CycleNumber cycle_number(const Multigraph& g) {
  CycleNumber out;
  // Degrees first, in global node order, so the witness does not depend on
  // how components are ordered.
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) != 2 && g.degree(v) != 4) {
      out.failure = degree_failure(v, g.degree(v));
      return out;
    }
  }
  out.decomposable = true;
  for (const Component& comp : connected_components(g)) {
    DecompositionResult r = run(comp.graph);
    if (!r.decomposable()) {
      out.decomposable = false;
      out.failure = r.failure();
      return out;
    }
    out.c += r.success().c;
  }
  return out;
}

}  // namespace cyclecut
