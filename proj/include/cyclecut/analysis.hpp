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

// Whole-graph analysis as reported by the CLI: per-component runs, summed
// cycle number, and optionally the lifted cycles and recovered ear scripts
// expressed in the input graph's ids.

#ifndef CYCLECUT_ANALYSIS_HPP_
#define CYCLECUT_ANALYSIS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclecut/construction.hpp"
#include "cyclecut/multigraph.hpp"

namespace cyclecut {

struct AnalysisOptions {
  bool cycles = false;
  bool ears = false;
};

struct ComponentReport {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::uint64_t c = 0;
  std::optional<EarRecovery> ears;  // node_map holds ids of the input graph
};

struct Analysis {
  bool decomposable = false;
  std::uint64_t c = 0;
  std::string reason;
  std::vector<ComponentReport> components;
  std::optional<CycleDecomposition> cycles;  // ids of the input graph
};

Analysis analyze(const Multigraph& g, const AnalysisOptions& options = {});

std::string analysis_to_json(const Analysis& a);
std::string analysis_to_text(const Analysis& a);

// Report for inputs that could not be read at all.
std::string error_report_json(const std::string& reason);

}  // namespace cyclecut

#endif  // CYCLECUT_ANALYSIS_HPP_
