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

#include <algorithm>
#include <functional>

#include "cyclecut/construction.hpp"
#include "gtest/gtest.h"
#include "test_graphs.hpp"

namespace cyclecut {
namespace {

using testing::bowtie;
using testing::cycle;
using testing::disjoint_union;
using testing::doubled_triangle;
using testing::endpoint_multiset;
using testing::make_graph;
using testing::quadruple_edge;

std::size_t c_min(const Multigraph& g) {
  const OracleResult r = brute_force_c(g);
  EXPECT_EQ(validate_decomposition(g, r.witness), std::nullopt);
  EXPECT_EQ(r.witness.cycles.size(), r.c_min);
  return r.c_min;
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(c_min(quadruple_edge()), 2u);
  EXPECT_EQ(c_min(cycle(6)), 1u);
  EXPECT_EQ(c_min(bowtie()), 2u);
  EXPECT_EQ(c_min(doubled_triangle()), 2u);
  EXPECT_EQ(c_min(testing::single_loop()), 1u);
  EXPECT_EQ(c_min(make_graph(1, {{0, 0}, {0, 0}, {0, 0}})), 3u);
  EXPECT_EQ(c_min(Multigraph()), 0u);
}

TEST(BruteForce, ComponentsAdd) {
  EXPECT_EQ(c_min(disjoint_union(doubled_triangle(), cycle(5))), 3u);
}

TEST(BruteForce, EvenGraphOutsideTheClass) {
  // K5 needs two Hamiltonian cycles.
  Multigraph k5(5);
  for (NodeId u = 0; u < 5; ++u) {
    for (NodeId v = u + 1; v < 5; ++v) k5.add_edge(u, v);
  }
  EXPECT_EQ(c_min(k5), 2u);
  // The octahedron splits into two Hamiltonian cycles.
  const Multigraph oct = make_graph(6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5},
                                         {2, 4}, {4, 3}, {3, 5}, {5, 2}});
  EXPECT_EQ(c_min(oct), 2u);
}

TEST(BruteForce, Errors) {
  EXPECT_THROW(brute_force_c(cycle(20)), OracleError);
  EXPECT_NO_THROW(brute_force_c(cycle(20), 20));
  EXPECT_THROW(brute_force_c(testing::house()), OracleError);
  EXPECT_THROW(brute_force_c(disjoint_union(cycle(3), Multigraph(1))), OracleError);
  try {
    brute_force_c(cycle(20));
  } catch (const OracleError& e) {
    EXPECT_NE(std::string(e.what()).find("exceeds max-edges"), std::string::npos);
  }
}

TEST(BruteForce, SubdivisionAndLoopRules) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Multigraph g = apply_script(random_script(seed, 1 + seed % 3, seed % 3)).graph;
    if (g.edge_count() > 12) continue;
    const std::size_t c = c_min(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      EXPECT_EQ(c_min(subdivide(g, e)), c);
    }
    Multigraph looped = g;
    looped.add_edge(0, 0);
    EXPECT_EQ(c_min(looped), c + 1);
  }
}

std::vector<Multigraph> enumerate(std::size_t n, std::size_t m) {
  std::vector<Multigraph> out;
  enumerate_even_multigraphs(n, m, [&](const Multigraph& g) { out.push_back(g); });
  return out;
}

TEST(Enumerate, OneNode) {
  const auto all = enumerate(1, 2);
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(all[0], make_graph(1, {{0, 0}}));
  EXPECT_EQ(all[1], make_graph(1, {{0, 0}, {0, 0}}));
}

TEST(Enumerate, TwoNodes) {
  // Counted by hand. One node: one or two loops (2). Two nodes with a loops
  // at 0, b at 1 and p parallel edges, 2a + p and 2b + p in {2, 4}, at most
  // four edges: p = 0 gives a, b in {1, 2} (4); p = 2 gives a, b in {0, 1}
  // (4); p = 4 gives 1. Total 11.
  const auto all = enumerate(2, 4);
  EXPECT_EQ(all.size(), 11u);
  const auto has = [&](const Multigraph& want) {
    return std::any_of(all.begin(), all.end(), [&](const Multigraph& g) {
      return g.node_count() == want.node_count() && endpoint_multiset(g) == endpoint_multiset(want);
    });
  };
  EXPECT_TRUE(has(make_graph(2, {{0, 1}, {0, 1}})));
  EXPECT_TRUE(has(quadruple_edge()));
  EXPECT_TRUE(has(make_graph(2, {{0, 0}, {1, 1}})));
  EXPECT_TRUE(has(make_graph(2, {{0, 0}, {0, 1}, {0, 1}, {1, 1}})));
}

TEST(Enumerate, ThreeNodesContainTriangles) {
  const auto all = enumerate(3, 6);
  const auto has = [&](const Multigraph& want) {
    return std::any_of(all.begin(), all.end(), [&](const Multigraph& g) {
      return g.node_count() == want.node_count() && endpoint_multiset(g) == endpoint_multiset(want);
    });
  };
  EXPECT_TRUE(has(cycle(3)));
  EXPECT_TRUE(has(doubled_triangle()));
}

TEST(Enumerate, EveryGraphIsEvenAndDistinct) {
  const auto all = enumerate(4, 8);
  EXPECT_GT(all.size(), 100u);
  std::vector<std::pair<std::size_t, std::vector<std::pair<NodeId, NodeId>>>> keys;
  for (const Multigraph& g : all) {
    ASSERT_LE(g.edge_count(), 8u);
    for (NodeId v = 0; v < g.node_count(); ++v) {
      ASSERT_TRUE(g.degree(v) == 2 || g.degree(v) == 4);
    }
    keys.emplace_back(g.node_count(), endpoint_multiset(g));
  }
  std::sort(keys.begin(), keys.end());
  EXPECT_EQ(std::adjacent_find(keys.begin(), keys.end()), keys.end());
}

// Independent count: every multiplicity vector over node pairs on k nodes,
// k = 1..n, filtered by the degree rule.
std::size_t count_by_multiplicities(std::size_t n, std::size_t m) {
  std::size_t total = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::pair<NodeId, NodeId>> pairs;
    for (NodeId u = 0; u < k; ++u) {
      for (NodeId v = u; v < k; ++v) pairs.emplace_back(u, v);
    }
    std::vector<int> mult(pairs.size(), 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
      if (i == pairs.size()) {
        std::vector<int> deg(k, 0);
        for (std::size_t j = 0; j < pairs.size(); ++j) {
          deg[pairs[j].first] += mult[j];
          deg[pairs[j].second] += mult[j];
        }
        for (int d : deg) {
          if (d != 2 && d != 4) return;
        }
        ++total;
        return;
      }
      for (int c = 0; c <= 4 && used + c <= m; ++c) {
        mult[i] = c;
        rec(i + 1, used + c);
      }
      mult[i] = 0;
    };
    rec(0, 0);
  }
  return total;
}

TEST(Enumerate, CompleteAgainstIndependentCount) {
  EXPECT_EQ(enumerate(2, 4).size(), count_by_multiplicities(2, 4));
  EXPECT_EQ(enumerate(3, 6).size(), count_by_multiplicities(3, 6));
  EXPECT_EQ(enumerate(4, 8).size(), count_by_multiplicities(4, 8));
}

TEST(Enumerate, Bounds) {
  EXPECT_THROW(enumerate(kMaxEnumerationNodes + 1, 4), OracleError);
  EXPECT_THROW(enumerate(2, kMaxEnumerationEdges + 1), OracleError);
}

}  // namespace
}  // namespace cyclecut
