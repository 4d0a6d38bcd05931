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
#include <set>

#include "cyclecut/recognizer.hpp"
#include "cyclecut/reduction.hpp"
#include "gtest/gtest.h"
#include "test_graphs.hpp"

namespace cyclecut {
namespace {

using testing::cycle;
using testing::doubled_triangle;
using testing::endpoint_multiset;
using testing::make_graph;
using testing::quadruple_edge;

EarScript script(std::uint32_t initial, std::vector<ScriptStep> steps) {
  EarScript s;
  s.initial = cycle_of_length(initial);
  s.steps = std::move(steps);
  return s;
}

Decomposable must_run(const Multigraph& g) {
  DecompositionResult r = run(g);
  if (!r.decomposable()) {
    ADD_FAILURE() << r.failure().reason;
    return {};
  }
  return std::move(r.success());
}

// Every edge of g and its image in the replay join the same nodes.
void expect_exact_rebuild(const Multigraph& g, const EarRecovery& rec) {
  const ScriptGraph replay = apply_script(rec.script);
  const Multigraph& h = replay.graph;
  ASSERT_EQ(h.node_count(), g.node_count());
  ASSERT_EQ(h.edge_count(), g.edge_count());
  ASSERT_EQ(rec.node_map.size(), h.node_count());
  ASSERT_EQ(rec.edge_map.size(), g.edge_count());
  std::set<EdgeId> images(rec.edge_map.begin(), rec.edge_map.end());
  EXPECT_EQ(images.size(), g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& mine = g.edge(e);
    const Edge& theirs = h.edge(rec.edge_map[e]);
    const NodeId a = rec.node_map[theirs.u];
    const NodeId b = rec.node_map[theirs.v];
    EXPECT_TRUE((a == mine.u && b == mine.v) || (a == mine.v && b == mine.u)) << "edge " << e;
  }
}

TEST(ApplyScript, DoubleEarOnTwoCycleIsQuadrupleEdge) {
  const ScriptGraph r = apply_script(script(2, {DoubleEarStep{{0, 1}}}));
  EXPECT_EQ(endpoint_multiset(r.graph), endpoint_multiset(quadruple_edge()));
  EXPECT_EQ(r.expected_c, 2u);
}

TEST(ApplyScript, DoubleEarOnTriangle) {
  const ScriptGraph r = apply_script(script(3, {DoubleEarStep{{0, 1, 2}}}));
  EXPECT_EQ(endpoint_multiset(r.graph), endpoint_multiset(doubled_triangle()));
  EXPECT_EQ(r.expected_c, 2u);
}

TEST(ApplyScript, LoopEarOnLoop) {
  const ScriptGraph r = apply_script(script(1, {DoubleEarStep{{0}}}));
  EXPECT_EQ(r.graph, make_graph(1, {{0, 0}, {0, 0}}));
  EXPECT_EQ(r.expected_c, 2u);
}

TEST(ApplyScript, SubdivideUsesCurrentIds) {
  const ScriptGraph r = apply_script(script(3, {SubdivideStep{1}, SubdivideStep{3}}));
  EXPECT_EQ(r.graph, subdivide(subdivide(cycle(3), 1), 3));
  EXPECT_EQ(r.expected_c, 1u);
}

TEST(ApplyScript, Errors) {
  EXPECT_THROW(apply_script(script(3, {SubdivideStep{3}})), ScriptError);
  EXPECT_THROW(apply_script(script(3, {DoubleEarStep{{0, 5}}})), ScriptError);
  EXPECT_THROW(apply_script(script(3, {DoubleEarStep{{0, 2, 0}}})), ScriptError);
  // Node 0 has degree 4 after the first ear.
  EXPECT_THROW(apply_script(script(3, {DoubleEarStep{{0, 1, 2}}, DoubleEarStep{{0}}})), ScriptError);
  // Not adjacent.
  EXPECT_THROW(apply_script(script(4, {DoubleEarStep{{0, 2}}})), ScriptError);
  EXPECT_THROW(apply_script(script(3, {DoubleEarStep{{}}})), ScriptError);
  EarScript bad;
  bad.initial.nodes = 3;
  bad.initial.cycle = {{0, 1}, {1, 2}, {2, 1}};
  EXPECT_THROW(apply_script(bad), ScriptError);
}

TEST(ScriptJson, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const EarScript s = random_script(seed, seed % 8, seed % 11);
    const std::string text = script_to_json(s);
    const EarScript back = script_from_json(text);
    EXPECT_EQ(back.steps, s.steps);
    EXPECT_EQ(back.initial.cycle, s.initial.cycle);
    EXPECT_EQ(back.seed, s.seed);
    EXPECT_EQ(script_to_json(back), text);
  }
}

TEST(ScriptJson, Rejects) {
  EXPECT_THROW(script_from_json("{"), ScriptError);
  EXPECT_THROW(script_from_json(R"({"initial": {"nodes": 1, "cycle": [[0, 0]]}, "steps": [{"bogus": 1}]})"),
               ScriptError);
  const std::string good = script_to_json(script(3, {DoubleEarStep{{0, 1, 2}}}));
  EXPECT_NO_THROW(script_from_json(good));
  std::string wrong = good;
  const auto at = wrong.find("\"expected_c\":2");
  ASSERT_NE(at, std::string::npos) << good;
  wrong.replace(at, 14, "\"expected_c\":5");
  EXPECT_THROW(script_from_json(wrong), ScriptError);
}

TEST(RandomScript, BareCycle) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ScriptGraph r = apply_script(random_script(seed, 0, 0));
    EXPECT_EQ(r.expected_c, 1u);
    EXPECT_EQ(r.graph.edge_count(), r.graph.node_count());
    for (NodeId v = 0; v < r.graph.node_count(); ++v) EXPECT_EQ(r.graph.degree(v), 2u);
    EXPECT_TRUE(is_connected(r.graph));
  }
}

TEST(RandomScript, OneEarOnTwoCycle) {
  RandomScriptOptions options;
  options.initial_length = 2;
  int full_path = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const EarScript s = random_script(seed, 1, 0, options);
    ASSERT_EQ(s.steps.size(), 1u);
    const auto& ear = std::get<DoubleEarStep>(s.steps[0]);
    if (ear.path.size() != 2) continue;
    ++full_path;
    const Multigraph g = apply_script(s).graph;
    EXPECT_EQ(endpoint_multiset(g), endpoint_multiset(quadruple_edge()));
    EXPECT_EQ(must_run(g).c, 2u);
  }
  EXPECT_GT(full_path, 0);
}

TEST(RandomScript, Deterministic) {
  for (std::uint64_t seed : {0u, 7u, 99u}) {
    EXPECT_EQ(script_to_json(random_script(seed, 9, 13)), script_to_json(random_script(seed, 9, 13)));
  }
  EXPECT_NE(script_to_json(random_script(1, 9, 13)), script_to_json(random_script(2, 9, 13)));
}

TEST(RandomScript, CountsAndContract) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::uint32_t ears = seed % 15;
    const std::uint32_t subs = (seed * 7) % 23;
    const EarScript s = random_script(seed, ears, subs);
    EXPECT_EQ(s.ear_count(), ears);
    const std::size_t sub_steps = s.steps.size() - s.ear_count();
    EXPECT_GE(sub_steps, subs);
    const ScriptGraph r = apply_script(s);
    EXPECT_EQ(r.expected_c, ears + 1u);
    const RecognitionReport rep = is_double_ear_decomposable(r.graph);
    EXPECT_TRUE(rep.verdict) << "seed " << seed;
    EXPECT_EQ(must_run(r.graph).c, r.expected_c) << "seed " << seed;
  }
}

TEST(RandomScript, ForEdges) {
  const EarScript s = random_script_for_edges(3, 5000);
  const ScriptGraph r = apply_script(s);
  EXPECT_GE(r.graph.edge_count(), 5000u);
  EXPECT_LT(r.graph.edge_count(), 5100u);
  EXPECT_EQ(must_run(r.graph).c, r.expected_c);
}

TEST(LiftCycles, QuadrupleEdge) {
  const Multigraph g = quadruple_edge();
  const CycleDecomposition d = lift_cycles(g, must_run(g).trace);
  ASSERT_EQ(d.cycles.size(), 2u);
  std::vector<EdgeId> all;
  for (const auto& c : d.cycles) {
    EXPECT_EQ(c.size(), 2u);
    for (const auto& oe : c) all.push_back(oe.edge);
  }
  std::sort(all.begin(), all.end());
  EXPECT_EQ(all, (std::vector<EdgeId>{0, 1, 2, 3}));
  EXPECT_EQ(validate_decomposition(g, d), std::nullopt);
}

TEST(LiftCycles, FiveCycle) {
  const Multigraph g = cycle(5);
  const CycleDecomposition d = lift_cycles(g, must_run(g).trace);
  ASSERT_EQ(d.cycles.size(), 1u);
  EXPECT_EQ(d.cycles[0].size(), 5u);
  EXPECT_EQ(validate_decomposition(g, d), std::nullopt);
}

TEST(LiftCycles, DoubledTriangleGivesTwoTriangles) {
  const Multigraph g = doubled_triangle();
  const CycleDecomposition d = lift_cycles(g, must_run(g).trace);
  ASSERT_EQ(d.cycles.size(), 2u);
  for (const auto& c : d.cycles) {
    ASSERT_EQ(c.size(), 3u);
    std::set<std::pair<NodeId, NodeId>> pairs;
    for (const auto& oe : c) pairs.emplace(std::min(oe.from, oe.to), std::max(oe.from, oe.to));
    EXPECT_EQ(pairs.size(), 3u);
  }
  EXPECT_EQ(validate_decomposition(g, d), std::nullopt);
}

CycleDecomposition walks(const Multigraph& g, std::vector<std::vector<EdgeId>> ids) {
  return orient_cycles(g, ids);
}

TEST(ValidateDecomposition, Examples) {
  const Multigraph c3 = cycle(3);
  EXPECT_EQ(validate_decomposition(c3, walks(c3, {{0, 1, 2}})), std::nullopt);
  EXPECT_EQ(validate_decomposition(c3, walks(c3, {{0, 1}})), "edge 2 uncovered");
  const Multigraph q = quadruple_edge();
  EXPECT_EQ(validate_decomposition(q, walks(q, {{0, 2}, {1, 3}})), std::nullopt);
}

TEST(ValidateDecomposition, Violations) {
  const Multigraph c3 = cycle(3);
  EXPECT_EQ(validate_decomposition(c3, walks(c3, {{0, 1, 2}, {}})), "cycle 1 is empty");
  EXPECT_EQ(validate_decomposition(c3, walks(c3, {{0, 1, 2}, {0}})), "edge 0 covered twice");
  EXPECT_EQ(validate_decomposition(c3, walks(c3, {{0, 1, 2, 7}})), "cycle 0 uses unknown edge 7");
  // Two triangles through node 0 walked as one closed walk.
  const Multigraph bow = testing::bowtie();
  const auto repeat = validate_decomposition(bow, walks(bow, {{0, 1, 2, 3, 4, 5}}));
  ASSERT_TRUE(repeat.has_value());
  EXPECT_NE(repeat->find("repeats node 0"), std::string::npos) << *repeat;
  EXPECT_EQ(validate_decomposition(bow, walks(bow, {{0, 1, 2}, {3, 4, 5}})), std::nullopt);
  // Not a closed walk.
  const Multigraph c4 = cycle(4);
  EXPECT_TRUE(validate_decomposition(c4, walks(c4, {{0, 2}, {1, 3}})).has_value());
}

TEST(EarScriptFromTrace, QuadrupleEdge) {
  const Multigraph g = quadruple_edge();
  const EarRecovery rec = ear_script_from_trace(g, must_run(g).trace);
  EXPECT_EQ(rec.script.initial.nodes, 2u);
  ASSERT_EQ(rec.script.steps.size(), 1u);
  EXPECT_EQ(std::get<DoubleEarStep>(rec.script.steps[0]).path.size(), 2u);
  expect_exact_rebuild(g, rec);
}

TEST(EarScriptFromTrace, DoubledTriangle) {
  const Multigraph g = doubled_triangle();
  const EarRecovery rec = ear_script_from_trace(g, must_run(g).trace);
  EXPECT_EQ(rec.script.initial.nodes, 3u);
  ASSERT_EQ(rec.script.steps.size(), 1u);
  EXPECT_EQ(std::get<DoubleEarStep>(rec.script.steps[0]).path.size(), 3u);
  expect_exact_rebuild(g, rec);
}

TEST(EarScriptFromTrace, GeneratedInstances) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const EarScript s = random_script(seed, seed % 16, seed % 30);
    const Multigraph g = apply_script(s).graph;
    const Decomposable d = must_run(g);
    const EarRecovery rec = ear_script_from_trace(g, d.trace);
    EXPECT_EQ(rec.script.ear_count() + 1, d.c) << "seed " << seed;
    expect_exact_rebuild(g, rec);
    EXPECT_EQ(must_run(apply_script(rec.script).graph).c, d.c);
    const CycleDecomposition cycles = lift_cycles(g, d.trace);
    EXPECT_EQ(cycles.cycles.size(), d.c);
    EXPECT_EQ(validate_decomposition(g, cycles), std::nullopt) << "seed " << seed;
  }
}

TEST(EarScriptFromTrace, RejectsForeignTrace) {
  const Decomposable d = must_run(doubled_triangle());
  EXPECT_THROW(ear_script_from_trace(cycle(5), d.trace), GraphError);
}

}  // namespace
}  // namespace cyclecut
