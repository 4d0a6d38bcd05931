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

#include "cyclecut/construction.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "json.hpp"

namespace cyclecut {

std::size_t EarScript::ear_count() const {
  return static_cast<std::size_t>(std::count_if(steps.begin(), steps.end(), [](const ScriptStep& s) {
    return std::holds_alternative<DoubleEarStep>(s);
  }));
}

InitialCycle cycle_of_length(std::uint32_t length) {
  if (length == 0) throw ScriptError("a cycle needs at least one node");
  InitialCycle c;
  c.nodes = length;
  for (std::uint32_t i = 0; i < length; ++i) c.cycle.emplace_back(i, (i + 1) % length);
  return c;
}

namespace {

// Growable multigraph used for replaying scripts. Subdivision follows the
// same id rules as cyclecut::subdivide.
class Builder {
 public:
  std::size_t node_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t degree(NodeId v) const { return adj_[v].size(); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Incidence>& incident(NodeId v) const { return adj_[v]; }

  NodeId add_node() {
    adj_.emplace_back();
    return static_cast<NodeId>(adj_.size() - 1);
  }

  EdgeId add_edge(NodeId u, NodeId v) {
    const auto id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({u, v});
    adj_[u].push_back({v, id});
    adj_[v].push_back({u, id});
    return id;
  }

  // Returns the new node.
  NodeId subdivide(EdgeId e) {
    if (e >= edges_.size()) {
      throw ScriptError("subdivide: edge " + std::to_string(e) + " does not exist (m = " +
                        std::to_string(edges_.size()) + ")");
    }
    const Edge old = edges_[e];
    const NodeId x = add_node();
    const auto fresh = static_cast<EdgeId>(edges_.size());
    edges_[e] = {old.u, x};
    edges_.push_back({x, old.v});
    if (old.u == old.v) {
      bool first = true;
      for (Incidence& inc : adj_[old.u]) {
        if (inc.edge != e) continue;
        inc = first ? Incidence{x, e} : Incidence{x, fresh};
        first = false;
      }
    } else {
      for (Incidence& inc : adj_[old.u]) {
        if (inc.edge == e) inc.neighbor = x;
      }
      for (Incidence& inc : adj_[old.v]) {
        if (inc.edge == e) inc = {x, fresh};
      }
    }
    adj_[x].push_back({old.u, e});
    adj_[x].push_back({old.v, fresh});
    return x;
  }

  // Returns the id of the closing edge; duplicates follow in path order.
  EdgeId add_ear(const std::vector<NodeId>& path) {
    if (path.empty()) throw ScriptError("ear: empty path");
    for (std::size_t i = 0; i < path.size(); ++i) {
      const NodeId v = path[i];
      if (v >= node_count()) throw ScriptError("ear: node " + std::to_string(v) + " does not exist");
      if (degree(v) != 2) {
        throw ScriptError("ear: node " + std::to_string(v) + " has degree " + std::to_string(degree(v)) +
                          ", expected 2");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (path[j] == v) throw ScriptError("ear: node " + std::to_string(v) + " repeats in path");
      }
    }
    std::vector<EdgeId> dup;
    dup.reserve(path.size());
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      EdgeId lowest = kNoEdge;
      for (const Incidence& inc : adj_[path[i]]) {
        if (inc.neighbor == path[i + 1]) lowest = std::min(lowest, inc.edge);
      }
      if (lowest == kNoEdge) {
        throw ScriptError("ear: nodes " + std::to_string(path[i]) + " and " + std::to_string(path[i + 1]) +
                          " are not adjacent");
      }
      dup.push_back(lowest);
    }
    const EdgeId closing = add_edge(path.front(), path.back());
    for (std::size_t i = 0; i < dup.size(); ++i) add_edge(path[i], path[i + 1]);
    return closing;
  }

  Multigraph freeze() const {
    Multigraph g(node_count());
    for (const Edge& e : edges_) g.add_edge(e.u, e.v);
    return g;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adj_;
};

Builder start_builder(const InitialCycle& init) {
  if (init.nodes == 0) throw ScriptError("initial cycle needs at least one node");
  if (init.cycle.size() != init.nodes) {
    throw ScriptError("initial cycle on " + std::to_string(init.nodes) + " nodes must have " +
                      std::to_string(init.nodes) + " edges");
  }
  Builder b;
  for (std::uint32_t i = 0; i < init.nodes; ++i) b.add_node();
  for (const auto& [u, v] : init.cycle) {
    if (u >= init.nodes || v >= init.nodes) throw ScriptError("initial cycle references a missing node");
    b.add_edge(u, v);
  }
  for (NodeId v = 0; v < init.nodes; ++v) {
    if (b.degree(v) != 2) throw ScriptError("initial graph is not a cycle");
  }
  // All degrees are 2, so it is a cycle iff it is connected.
  std::vector<bool> seen(init.nodes, false);
  std::vector<NodeId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const NodeId x = stack.back();
    stack.pop_back();
    for (const Incidence& inc : b.incident(x)) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = true;
        ++reached;
        stack.push_back(inc.neighbor);
      }
    }
  }
  if (reached != init.nodes) throw ScriptError("initial graph is not a cycle");
  return b;
}

// Portable bounded draw: std::uniform_int_distribution differs between
// standard libraries, which would break byte-identical scripts.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % n;
  }

 private:
  std::mt19937_64 engine_;
};

class Generator {
 public:
  Generator(std::uint64_t seed, std::uint32_t initial_length, std::uint32_t max_extension)
      : rng_(seed), max_extension_(max_extension) {
    const std::uint32_t length = initial_length != 0 ? initial_length
                                                     : static_cast<std::uint32_t>(1 + rng_.below(6));
    script_.initial = cycle_of_length(length);
    script_.seed = seed;
    builder_ = start_builder(script_.initial);
    for (NodeId v = 0; v < builder_.node_count(); ++v) add_deg2(v);
  }

  Rng& rng() { return rng_; }
  bool has_deg2() const { return !deg2_.empty(); }
  std::size_t edge_count() const { return builder_.edge_count(); }
  EarScript take() { return std::move(script_); }

  void subdivide() {
    const auto e = static_cast<EdgeId>(rng_.below(builder_.edge_count()));
    const NodeId x = builder_.subdivide(e);
    add_deg2(x);
    script_.steps.emplace_back(SubdivideStep{e});
  }

  void ear() {
    const NodeId x = deg2_[rng_.below(deg2_.size())];
    ++epoch_;
    stamp_.resize(builder_.node_count(), 0);
    stamp_[x] = epoch_;
    const auto& inc = builder_.incident(x);
    std::vector<NodeId> forward = walk(x, inc[0]);
    forward.resize(rng_.below(forward.size() + 1));
    for (NodeId y : forward) stamp_[y] = epoch_;
    std::vector<NodeId> backward = walk(x, inc[1]);
    backward.resize(rng_.below(backward.size() + 1));

    std::vector<NodeId> path(backward.rbegin(), backward.rend());
    path.push_back(x);
    path.insert(path.end(), forward.begin(), forward.end());
    builder_.add_ear(path);
    for (NodeId y : path) remove_deg2(y);
    script_.steps.emplace_back(DoubleEarStep{std::move(path)});
  }

 private:
  // Degree-2 nodes reachable from x through `first` without revisiting a
  // stamped node, at most max_extension_ of them.
  std::vector<NodeId> walk(NodeId x, Incidence first) {
    std::vector<NodeId> out;
    NodeId next = first.neighbor;
    EdgeId via = first.edge;
    while (out.size() < max_extension_) {
      if (builder_.degree(next) != 2 || stamp_[next] == epoch_) break;
      if (std::find(out.begin(), out.end(), next) != out.end()) break;
      out.push_back(next);
      const auto& inc = builder_.incident(next);
      const Incidence& onward = inc[0].edge == via ? inc[1] : inc[0];
      if (onward.edge == via) break;
      via = onward.edge;
      next = onward.neighbor;
    }
    (void)x;
    return out;
  }

  void add_deg2(NodeId v) {
    if (pos_.size() <= v) pos_.resize(v + 1, kNoNode);
    pos_[v] = static_cast<NodeId>(deg2_.size());
    deg2_.push_back(v);
  }

  void remove_deg2(NodeId v) {
    const NodeId p = pos_[v];
    if (p == kNoNode) return;
    const NodeId moved = deg2_.back();
    deg2_[p] = moved;
    pos_[moved] = p;
    deg2_.pop_back();
    pos_[v] = kNoNode;
  }

  Rng rng_;
  std::uint32_t max_extension_;
  EarScript script_;
  Builder builder_;
  std::vector<NodeId> deg2_;
  std::vector<NodeId> pos_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

}  // namespace

ScriptGraph apply_script(const EarScript& s) {
  Builder b = start_builder(s.initial);
  for (const ScriptStep& step : s.steps) {
    if (const auto* sub = std::get_if<SubdivideStep>(&step)) {
      b.subdivide(sub->edge);
    } else {
      b.add_ear(std::get<DoubleEarStep>(step).path);
    }
  }
  return {b.freeze(), s.expected_c()};
}

EarScript random_script(std::uint64_t seed, std::uint32_t ears, std::uint32_t subdivisions,
                        const RandomScriptOptions& options) {
  Generator gen(seed, options.initial_length, std::max<std::uint32_t>(options.max_extension, 1));
  std::uint64_t ears_left = ears;
  std::uint64_t subs_left = subdivisions;
  while (ears_left + subs_left > 0) {
    // Choosing an ear with probability ears_left / total gives a uniformly
    // random interleaving of the two step kinds.
    const bool ear = gen.rng().below(ears_left + subs_left) < ears_left;
    if (!ear) {
      gen.subdivide();
      --subs_left;
      continue;
    }
    if (!gen.has_deg2()) {
      gen.subdivide();
      if (subs_left > 0) --subs_left;
    }
    gen.ear();
    --ears_left;
  }
  return gen.take();
}

EarScript random_script_for_edges(std::uint64_t seed, std::size_t target_edges) {
  Generator gen(seed, 0, 24);
  while (gen.edge_count() < target_edges) {
    if (gen.has_deg2() && gen.rng().below(3) == 0) {
      gen.ear();
    } else {
      gen.subdivide();
    }
  }
  return gen.take();
}

// ---------------------------------------------------------------------------
// JSON

std::string script_to_json(const EarScript& s) {
  using nlohmann::json;
  json cycle = json::array();
  for (const auto& [u, v] : s.initial.cycle) cycle.push_back({u, v});
  json steps = json::array();
  for (const ScriptStep& step : s.steps) {
    if (const auto* sub = std::get_if<SubdivideStep>(&step)) {
      steps.push_back({{"subdivide", sub->edge}});
    } else {
      steps.push_back({{"ear", std::get<DoubleEarStep>(step).path}});
    }
  }
  json doc;
  doc["initial"] = {{"nodes", s.initial.nodes}, {"cycle", std::move(cycle)}};
  doc["steps"] = std::move(steps);
  if (s.seed) doc["seed"] = *s.seed;
  doc["expected_c"] = s.expected_c();
  return doc.dump() + "\n";
}

EarScript script_from_json(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ScriptError(std::string("script is not valid JSON: ") + e.what());
  }
  try {
    EarScript s;
    const json& init = doc.at("initial");
    s.initial.nodes = init.at("nodes").get<std::uint32_t>();
    for (const json& pair : init.at("cycle")) {
      if (!pair.is_array() || pair.size() != 2) throw ScriptError("cycle entries must be [u, v] pairs");
      s.initial.cycle.emplace_back(pair[0].get<NodeId>(), pair[1].get<NodeId>());
    }
    for (const json& step : doc.at("steps")) {
      if (step.contains("subdivide")) {
        s.steps.emplace_back(SubdivideStep{step.at("subdivide").get<EdgeId>()});
      } else if (step.contains("ear")) {
        s.steps.emplace_back(DoubleEarStep{step.at("ear").get<std::vector<NodeId>>()});
      } else {
        throw ScriptError("step must be {\"subdivide\": e} or {\"ear\": [...]}");
      }
    }
    if (doc.contains("seed")) s.seed = doc.at("seed").get<std::uint64_t>();
    if (doc.contains("expected_c") && doc.at("expected_c").get<std::uint64_t>() != s.expected_c()) {
      throw ScriptError("expected_c does not match the number of ear steps + 1");
    }
    return s;
  } catch (const json::exception& e) {
    throw ScriptError(std::string("malformed script: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// lifting

namespace {

void check_trace_matches(const Multigraph& g, const ReductionTrace& trace) {
  if (trace.original_nodes != g.node_count() || trace.original_edges != g.edge_count() ||
      trace.records.size() < g.edge_count()) {
    throw GraphError("trace does not belong to this graph");
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const CopyRecord& r = trace.records[e];
    if (!r.leaf || r.via_or_edge != e || r.end_a != g.edge(e).u || r.end_b != g.edge(e).v) {
      throw GraphError("trace does not belong to this graph");
    }
  }
}

}  // namespace

CycleDecomposition lift_cycles(const Multigraph& g, const ReductionTrace& trace) {
  check_trace_matches(g, trace);
  CycleDecomposition d;
  for (const ReductionStep& step : trace.steps) {
    if (const auto* s = std::get_if<LoopRemoved>(&step)) {
      d.cycles.push_back(trace.expand(s->record, s->node));
    } else if (const auto* s = std::get_if<FinalLoop>(&step)) {
      d.cycles.push_back(trace.expand(s->record, s->node));
    } else if (const auto* s = std::get_if<DoubleEdgePath>(&step)) {
      std::vector<OrientedEdge> cycle;
      const auto nodes = trace.nodes(*s);
      const auto path = trace.path(*s);
      for (std::size_t i = 0; i < path.size(); ++i) trace.expand_into(path[i], nodes[i], cycle);
      trace.expand_into(s->closing, nodes.back(), cycle);
      d.cycles.push_back(std::move(cycle));
    } else if (const auto* s = std::get_if<TripleEdge>(&step)) {
      std::vector<OrientedEdge> cycle = trace.expand(s->removed[0], s->u);
      trace.expand_into(s->removed[1], s->w, cycle);
      d.cycles.push_back(std::move(cycle));
    } else if (const auto* s = std::get_if<QuadrupleEdge>(&step)) {
      for (int k = 0; k < 4; k += 2) {
        std::vector<OrientedEdge> cycle = trace.expand(s->copies[k], s->u);
        trace.expand_into(s->copies[k + 1], s->w, cycle);
        d.cycles.push_back(std::move(cycle));
      }
    }
  }
  return d;
}

std::optional<std::string> validate_decomposition(const Multigraph& g, const CycleDecomposition& d) {
  const std::size_t m = g.edge_count();
  std::vector<bool> covered(m, false);
  for (std::size_t c = 0; c < d.cycles.size(); ++c) {
    if (d.cycles[c].empty()) return "cycle " + std::to_string(c) + " is empty";
    for (const OrientedEdge& oe : d.cycles[c]) {
      if (oe.edge >= m) return "cycle " + std::to_string(c) + " uses unknown edge " + std::to_string(oe.edge);
      if (covered[oe.edge]) return "edge " + std::to_string(oe.edge) + " covered twice";
      covered[oe.edge] = true;
    }
  }
  for (EdgeId e = 0; e < m; ++e) {
    if (!covered[e]) return "edge " + std::to_string(e) + " uncovered";
  }

  for (std::size_t c = 0; c < d.cycles.size(); ++c) {
    const auto& cycle = d.cycles[c];
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const OrientedEdge& oe = cycle[i];
      const Edge& e = g.edge(oe.edge);
      const bool ends_ok = (e.u == oe.from && e.v == oe.to) || (e.v == oe.from && e.u == oe.to);
      if (!ends_ok) {
        return "cycle " + std::to_string(c) + ": edge " + std::to_string(oe.edge) + " does not join " +
               std::to_string(oe.from) + " and " + std::to_string(oe.to);
      }
      const OrientedEdge& next = cycle[(i + 1) % cycle.size()];
      if (oe.to != next.from) {
        return "cycle " + std::to_string(c) + " is not closed at position " + std::to_string(i);
      }
    }
  }

  std::vector<std::size_t> seen(g.node_count(), ~std::size_t{0});
  for (std::size_t c = 0; c < d.cycles.size(); ++c) {
    for (const OrientedEdge& oe : d.cycles[c]) {
      if (seen[oe.from] == c) {
        return "cycle " + std::to_string(c) + " repeats node " + std::to_string(oe.from);
      }
      seen[oe.from] = c;
    }
  }
  return std::nullopt;
}

CycleDecomposition orient_cycles(const Multigraph& g, const std::vector<std::vector<EdgeId>>& cycles) {
  CycleDecomposition d;
  for (const auto& ids : cycles) {
    std::vector<OrientedEdge> walk;
    walk.reserve(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (ids[i] >= g.edge_count()) {
        walk.push_back({ids[i], kNoNode, kNoNode});
        continue;
      }
      const Edge& e = g.edge(ids[i]);
      NodeId from = e.u;
      if (i > 0) {
        from = walk.back().to;
      } else if (ids.size() > 1 && ids[1] < g.edge_count()) {
        // Start at the end of the first edge that the second edge misses.
        const Edge& next = g.edge(ids[1]);
        if (e.u == next.u || e.u == next.v) from = (e.v == next.u || e.v == next.v) ? e.u : e.v;
      }
      const NodeId to = from == e.u ? e.v : (from == e.v ? e.u : e.v);
      walk.push_back({ids[i], from, to});
    }
    d.cycles.push_back(std::move(walk));
  }
  return d;
}

// ---------------------------------------------------------------------------
// ear script recovery

EarRecovery ear_script_from_trace(const Multigraph& g, const ReductionTrace& trace) {
  check_trace_matches(g, trace);
  if (trace.steps.empty()) throw GraphError("trace is empty");

  EarRecovery out;
  std::vector<EdgeId> rec_edge(trace.records.size(), kNoEdge);
  std::vector<NodeId> replay_of(g.node_count(), kNoNode);
  auto replay = [&](NodeId v) {
    if (replay_of[v] == kNoNode) throw GraphError("trace references node " + std::to_string(v) + " before it exists");
    return replay_of[v];
  };
  auto name = [&](NodeId orig, NodeId replayed) {
    replay_of[orig] = replayed;
    if (out.node_map.size() <= replayed) out.node_map.resize(replayed + 1, kNoNode);
    out.node_map[replayed] = orig;
  };

  Builder b;
  const ReductionStep& last = trace.steps.back();
  if (const auto* fl = std::get_if<FinalLoop>(&last)) {
    out.script.initial = cycle_of_length(1);
    b = start_builder(out.script.initial);
    name(fl->node, 0);
    rec_edge[fl->record] = 0;
  } else if (const auto* q = std::get_if<QuadrupleEdge>(&last)) {
    out.script.initial = cycle_of_length(2);
    b = start_builder(out.script.initial);
    name(q->u, 0);
    name(q->w, 1);
    rec_edge[q->copies[0]] = 0;
    rec_edge[q->copies[1]] = 1;
    const std::vector<NodeId> path{0, 1};
    const EdgeId closing = b.add_ear(path);
    rec_edge[q->copies[2]] = closing;
    rec_edge[q->copies[3]] = closing + 1;
    out.script.steps.emplace_back(DoubleEarStep{path});
  } else {
    throw GraphError("trace does not end with a final loop or a quadruple edge");
  }

  auto edge_of = [&](RecordId r) {
    if (rec_edge[r] == kNoEdge) throw GraphError("trace references a copy that does not exist yet");
    return rec_edge[r];
  };

  for (std::size_t i = trace.steps.size() - 1; i-- > 0;) {
    const ReductionStep& step = trace.steps[i];
    if (const auto* s = std::get_if<Resolved>(&step)) {
      const CopyRecord& merged = trace.records[s->merged];
      const EdgeId e = edge_of(s->merged);
      const NodeId first_end = b.edge(e).u;
      const NodeId x = b.subdivide(e);
      const auto fresh = static_cast<EdgeId>(b.edge_count() - 1);
      if (first_end == replay(merged.end_a)) {
        rec_edge[merged.left] = e;
        rec_edge[merged.right] = fresh;
      } else {
        rec_edge[merged.right] = e;
        rec_edge[merged.left] = fresh;
      }
      name(s->node, x);
      out.script.steps.emplace_back(SubdivideStep{e});
    } else if (const auto* s = std::get_if<LoopRemoved>(&step)) {
      const std::vector<NodeId> path{replay(s->node)};
      rec_edge[s->record] = b.add_ear(path);
      out.script.steps.emplace_back(DoubleEarStep{path});
    } else if (const auto* s = std::get_if<TripleEdge>(&step)) {
      const std::vector<NodeId> path{replay(s->u), replay(s->w)};
      const EdgeId closing = b.add_ear(path);
      rec_edge[s->removed[0]] = closing;
      rec_edge[s->removed[1]] = closing + 1;
      out.script.steps.emplace_back(DoubleEarStep{path});
    } else if (const auto* s = std::get_if<DoubleEdgePath>(&step)) {
      const auto nodes = trace.nodes(*s);
      const auto records = trace.path(*s);
      std::vector<NodeId> path;
      path.reserve(nodes.size());
      for (NodeId v : nodes) path.push_back(replay(v));
      const EdgeId closing = b.add_ear(path);
      rec_edge[s->closing] = closing;
      for (std::size_t k = 0; k < records.size(); ++k) {
        rec_edge[records[k]] = closing + 1 + static_cast<EdgeId>(k);
      }
      out.script.steps.emplace_back(DoubleEarStep{std::move(path)});
    } else {
      throw GraphError("terminal step in the middle of a trace");
    }
  }

  if (b.node_count() != g.node_count() || b.edge_count() != g.edge_count()) {
    throw GraphError("recovered script does not rebuild the graph");
  }
  out.edge_map.resize(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) out.edge_map[e] = edge_of(e);

  // Subdivisions before the first ear only lengthen the initial cycle; fold
  // them in. Replay ids do not change.
  std::size_t leading = 0;
  while (leading < out.script.steps.size() &&
         std::holds_alternative<SubdivideStep>(out.script.steps[leading])) {
    ++leading;
  }
  if (leading > 0) {
    EarScript prefix;
    prefix.initial = out.script.initial;
    prefix.steps.assign(out.script.steps.begin(), out.script.steps.begin() + leading);
    const Multigraph start = apply_script(prefix).graph;
    out.script.initial.nodes = static_cast<std::uint32_t>(start.node_count());
    out.script.initial.cycle.clear();
    for (const Edge& e : start.edges()) out.script.initial.cycle.emplace_back(e.u, e.v);
    out.script.steps.erase(out.script.steps.begin(), out.script.steps.begin() + leading);
  }
  return out;
}

}  // namespace cyclecut
