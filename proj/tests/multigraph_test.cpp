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

#include <numeric>
#include <random>
#include <string>

#include "gtest/gtest.h"
#include "test_graphs.hpp"

namespace cyclecut {
namespace {

using testing::cycle;
using testing::degree_multiset;
using testing::doubled_triangle;
using testing::endpoint_multiset;
using testing::make_graph;

TEST(ParseGraph, QuadrupleEdge) {
  const Multigraph g = parse_graph("2 4\n0 1\n0 1\n0 1\n0 1");
  EXPECT_EQ(g.node_count(), 2u);
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_EQ(g.degree(0), 4u);
}

TEST(ParseGraph, LoopCountsTwice) {
  const Multigraph g = parse_graph("1 1\n0 0\n");
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(degree(g, 0), 2u);
}

TEST(ParseGraph, DoubledTriangle) {
  const Multigraph g = parse_graph("3 6\n0 1\n0 1\n1 2\n1 2\n2 0\n2 0\n");
  for (NodeId v = 0; v < 3; ++v) EXPECT_EQ(degree(g, v), 4u);
  EXPECT_EQ(g.edge(4).u, 2u);
  EXPECT_EQ(g.edge(4).v, 0u);
}

TEST(ParseGraph, CommentsAndBlankLines) {
  const Multigraph g = parse_graph("# header next\n\n3 3\n0 1\n  1 2 \n# x\n2 0\n");
  EXPECT_EQ(g, cycle(3));
}

std::size_t error_line(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no error for " << text;
  return 0;
}

TEST(ParseGraph, ErrorsCiteLines) {
  EXPECT_EQ(error_line("2 1\n0 2\n"), 2u);          // node out of range
  EXPECT_EQ(error_line("2 x\n"), 1u);               // non-integer
  EXPECT_EQ(error_line("2 1\n0 1\n1 0\n"), 3u);     // too many edges
  EXPECT_EQ(error_line("3 3\n0 1\n1 2\n"), 3u);     // too few edges
  EXPECT_EQ(error_line("2 1\n0 1 1\n"), 2u);        // three tokens
  EXPECT_EQ(error_line("2 1\n-1 0\n"), 2u);         // negative
  EXPECT_EQ(error_line(""), 1u);                    // no header
  EXPECT_THROW(parse_graph("1\n"), ParseError);
}

TEST(ParseGraph, MessageMentionsLine) {
  try {
    parse_graph("2 1\n0 5\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(Degree, Examples) {
  const Multigraph t = doubled_triangle();
  for (NodeId v = 0; v < 3; ++v) EXPECT_EQ(degree(t, v), 4u);
  EXPECT_EQ(degree(testing::single_loop(), 0), 2u);
  EXPECT_EQ(degree(Multigraph(1), 0), 0u);
  EXPECT_THROW(degree(Multigraph(1), 1), GraphError);
}

TEST(ConnectedComponents, DoubledTriangleIsOnePiece) {
  const auto parts = connected_components(doubled_triangle());
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0].graph, doubled_triangle());
  EXPECT_EQ(parts[0].nodes, (std::vector<NodeId>{0, 1, 2}));
  EXPECT_EQ(parts[0].edges, (std::vector<EdgeId>{0, 1, 2, 3, 4, 5}));
}

TEST(ConnectedComponents, TwoLoops) {
  const Multigraph g = make_graph(2, {{0, 0}, {1, 1}});
  const auto parts = connected_components(g);
  ASSERT_EQ(parts.size(), 2u);
  for (const auto& p : parts) {
    EXPECT_EQ(p.graph, testing::single_loop());
  }
  EXPECT_EQ(parts[1].nodes, std::vector<NodeId>{1});
  EXPECT_EQ(parts[1].edges, std::vector<EdgeId>{1});
  EXPECT_FALSE(is_connected(g));
}

TEST(ConnectedComponents, IsolatedNodeIsItsOwnComponent) {
  const Multigraph g = make_graph(4, {{1, 2}, {2, 3}, {3, 1}});
  const auto parts = connected_components(g);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].graph.node_count(), 1u);
  EXPECT_EQ(parts[0].graph.edge_count(), 0u);
  EXPECT_EQ(parts[1].graph, cycle(3));
}

TEST(Subdivide, TripleEdgeTowardsHouse) {
  const Multigraph g = subdivide(make_graph(2, {{0, 1}, {0, 1}, {0, 1}}), 0);
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_EQ(degree_multiset(g), (std::vector<std::size_t>{2, 3, 3}));
  // Subdividing another original copy gives the house.
  const Multigraph h = subdivide(g, 1);
  EXPECT_EQ(degree_multiset(h), (std::vector<std::size_t>{2, 2, 3, 3}));
}

TEST(Subdivide, LoopSplitsIntoDoubleEdge) {
  const Multigraph g = subdivide(testing::single_loop(), 0);
  EXPECT_EQ(g, make_graph(2, {{0, 1}, {1, 0}}));
}

TEST(Subdivide, TriangleBecomesSquare) {
  const Multigraph g = subdivide(cycle(3), 1);
  EXPECT_EQ(g, make_graph(4, {{0, 1}, {1, 3}, {2, 0}, {3, 2}}));
  EXPECT_EQ(degree_multiset(g), degree_multiset(cycle(4)));
  EXPECT_THROW(subdivide(cycle(3), 3), GraphError);
}

TEST(Resolve, SquareBecomesTriangle) {
  const Multigraph g = resolve(cycle(4), 2);
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(degree_multiset(g), degree_multiset(cycle(3)));
  EXPECT_TRUE(is_connected(g));
}

TEST(Resolve, DoubleEdgeBecomesLoop) {
  const Multigraph g = resolve(make_graph(2, {{0, 1}, {0, 1}}), 0);
  EXPECT_EQ(g, testing::single_loop());
}

TEST(Resolve, UndoesSubdivision) {
  const Multigraph t = doubled_triangle();
  for (EdgeId e = 0; e < t.edge_count(); ++e) {
    const Multigraph s = subdivide(t, e);
    EXPECT_EQ(resolve(s, static_cast<NodeId>(t.node_count())), t) << "edge " << e;
  }
}

TEST(Resolve, Errors) {
  EXPECT_THROW(resolve(doubled_triangle(), 0), GraphError);                 // degree 4
  EXPECT_THROW(resolve(testing::single_loop(), 0), GraphError);             // loop
  EXPECT_THROW(resolve(make_graph(3, {{0, 0}, {1, 2}}), 0), GraphError);    // loop
  EXPECT_THROW(resolve(cycle(3), 3), GraphError);                           // unknown
}

Multigraph random_multigraph(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  Multigraph g(n);
  std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(n - 1));
  for (std::size_t i = 0; i < m; ++i) g.add_edge(pick(rng), pick(rng));
  return g;
}

TEST(MultigraphProperty, DegreeSumIsTwiceEdgeCount) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Multigraph g = random_multigraph(rng, 1 + trial % 9, trial % 17);
    std::size_t sum = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) sum += g.degree(v);
    EXPECT_EQ(sum, 2 * g.edge_count());
  }
}

TEST(MultigraphProperty, SubdivideResolveRoundTrip) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const Multigraph g = random_multigraph(rng, 1 + trial % 7, 1 + trial % 13);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Multigraph s = subdivide(g, e);
      ASSERT_EQ(s.node_count(), g.node_count() + 1);
      ASSERT_EQ(s.edge_count(), g.edge_count() + 1);
      ASSERT_EQ(s.degree(static_cast<NodeId>(g.node_count())), 2u);
      const Multigraph r = resolve(s, static_cast<NodeId>(g.node_count()));
      ASSERT_EQ(r.node_count(), g.node_count());
      ASSERT_EQ(degree_multiset(r), degree_multiset(g));
      ASSERT_EQ(endpoint_multiset(r), endpoint_multiset(g));
    }
  }
}

TEST(MultigraphProperty, ComponentsPartitionNodesAndEdges) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Multigraph g = random_multigraph(rng, 1 + trial % 12, trial % 8);
    const auto parts = connected_components(g);
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::vector<int> seen_edge(g.edge_count(), 0);
    for (const auto& p : parts) {
      nodes += p.graph.node_count();
      edges += p.graph.edge_count();
      for (EdgeId e = 0; e < p.graph.edge_count(); ++e) {
        const Edge& local = p.graph.edge(e);
        const Edge& global = g.edge(p.edges[e]);
        EXPECT_EQ(p.nodes[local.u], global.u);
        EXPECT_EQ(p.nodes[local.v], global.v);
        ++seen_edge[p.edges[e]];
      }
    }
    EXPECT_EQ(nodes, g.node_count());
    EXPECT_EQ(edges, g.edge_count());
    for (int c : seen_edge) EXPECT_EQ(c, 1);
  }
}

TEST(MultigraphProperty, SerializeParseRoundTrip) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const Multigraph g = random_multigraph(rng, 1 + trial % 10, trial % 20);
    const Multigraph back = parse_graph(serialize_graph(g));
    EXPECT_EQ(back, g);
  }
}

}  // namespace
}  // namespace cyclecut
