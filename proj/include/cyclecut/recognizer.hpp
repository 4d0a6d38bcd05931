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

// Structural recognition of double ear decomposable graphs, independent of
// the reduction engine: connected, every degree 2 or 4, and no K4 minor.

#ifndef CYCLECUT_RECOGNIZER_HPP_
#define CYCLECUT_RECOGNIZER_HPP_

#include <cstddef>

#include "cyclecut/multigraph.hpp"

namespace cyclecut {

struct DegreeCheck {
  bool ok = true;
  NodeId node = kNoNode;  // first offending node
  std::size_t degree = 0;
};

DegreeCheck degrees_in_2_4(const Multigraph& g);

// Series-parallel reduction on the underlying simple graph: delete nodes of
// degree <= 1, suppress nodes of degree 2 (merging the new edge into an
// existing one if present). Treewidth is at most 2 iff nothing survives.
bool treewidth_at_most_2(const Multigraph& g);

struct RecognitionReport {
  DegreeCheck degrees;
  bool connected = false;
  bool treewidth_le2 = false;
  bool verdict = false;
};

RecognitionReport is_double_ear_decomposable(const Multigraph& g);

}  // namespace cyclecut

#endif  // CYCLECUT_RECOGNIZER_HPP_
