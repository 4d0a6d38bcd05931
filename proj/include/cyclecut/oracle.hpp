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

// Exhaustive minimum cycle decomposition for small even multigraphs. Slow
// on purpose; it exists to check the reduction engine.

#ifndef CYCLECUT_ORACLE_HPP_
#define CYCLECUT_ORACLE_HPP_

#include <cstddef>
#include <functional>

#include "cyclecut/construction.hpp"
#include "cyclecut/multigraph.hpp"

namespace cyclecut {

inline constexpr std::size_t kDefaultOracleEdges = 16;

class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  std::size_t c_min = 0;
  CycleDecomposition witness;
};

// Throws OracleError if m > max_edges, a degree is odd, or a component has
// no edges.
OracleResult brute_force_c(const Multigraph& g, std::size_t max_edges = kDefaultOracleEdges);

inline constexpr std::size_t kMaxEnumerationNodes = 5;
inline constexpr std::size_t kMaxEnumerationEdges = 12;

// Calls `visit` once for every labeled multigraph on 1..max_nodes nodes with
// at most max_edges edges and every degree in {2, 4}. Edges come in
// lexicographic order of (u, v), u <= v. Disconnected graphs are included.
void enumerate_even_multigraphs(std::size_t max_nodes, std::size_t max_edges,
                                const std::function<void(const Multigraph&)>& visit);

}  // namespace cyclecut

#endif  // CYCLECUT_ORACLE_HPP_
