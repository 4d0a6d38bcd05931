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

#include "cyclecut/analysis.hpp"

#include "cyclecut/reduction.hpp"
#include "json.hpp"

namespace cyclecut {

Analysis analyze(const Multigraph& g, const AnalysisOptions& options) {
  Analysis a;
  const CycleNumber quick = cycle_number(g);
  if (!quick.decomposable) {
    a.reason = quick.failure.reason;
    return a;
  }
  a.decomposable = true;
  a.c = quick.c;
  if (options.cycles) a.cycles.emplace();

  for (const Component& comp : connected_components(g)) {
    ComponentReport report;
    report.nodes = comp.graph.node_count();
    report.edges = comp.graph.edge_count();
    if (!options.cycles && !options.ears) {
      report.c = run(comp.graph).success().c;
      a.components.push_back(std::move(report));
      continue;
    }
    DecompositionResult r = run(comp.graph);
    const Decomposable& ok = r.success();
    report.c = ok.c;
    if (options.cycles) {
      for (auto& walk : lift_cycles(comp.graph, ok.trace).cycles) {
        for (OrientedEdge& oe : walk) oe = {comp.edges[oe.edge], comp.nodes[oe.from], comp.nodes[oe.to]};
        a.cycles->cycles.push_back(std::move(walk));
      }
    }
    if (options.ears) {
      EarRecovery rec = ear_script_from_trace(comp.graph, ok.trace);
      for (NodeId& v : rec.node_map) v = comp.nodes[v];
      report.ears = std::move(rec);
    }
    a.components.push_back(std::move(report));
  }
  return a;
}

std::string analysis_to_json(const Analysis& a) {
  using nlohmann::json;
  json doc;
  if (!a.decomposable) {
    doc["status"] = "not-decomposable";
    doc["reason"] = a.reason;
    return doc.dump(2) + "\n";
  }
  doc["status"] = "decomposable";
  doc["c"] = a.c;
  json comps = json::array();
  for (const ComponentReport& r : a.components) {
    comps.push_back({{"nodes", r.nodes}, {"edges", r.edges}, {"c", r.c}});
  }
  doc["components"] = std::move(comps);
  if (a.cycles) {
    json cycles = json::array();
    for (const auto& walk : a.cycles->cycles) {
      json ids = json::array();
      for (const OrientedEdge& oe : walk) ids.push_back(oe.edge);
      cycles.push_back(std::move(ids));
    }
    doc["cycles"] = std::move(cycles);
  }
  const bool any_ears = !a.components.empty() && a.components.front().ears.has_value();
  if (any_ears) {
    json ears = json::array();
    for (const ComponentReport& r : a.components) {
      json script = json::parse(script_to_json(r.ears->script));
      script["node_map"] = r.ears->node_map;
      ears.push_back(std::move(script));
    }
    doc["ears"] = std::move(ears);
  }
  return doc.dump(2) + "\n";
}

std::string analysis_to_text(const Analysis& a) {
  std::string out;
  if (!a.decomposable) return "not decomposable: " + a.reason + "\n";
  out += "decomposable\nc = " + std::to_string(a.c) + "\n";
  if (a.components.size() > 1) {
    for (std::size_t i = 0; i < a.components.size(); ++i) {
      const ComponentReport& r = a.components[i];
      out += "component " + std::to_string(i) + ": " + std::to_string(r.nodes) + " nodes, " +
             std::to_string(r.edges) + " edges, c = " + std::to_string(r.c) + "\n";
    }
  }
  if (a.cycles) {
    for (const auto& walk : a.cycles->cycles) {
      out += "cycle:";
      for (const OrientedEdge& oe : walk) out += " " + std::to_string(oe.edge);
      out += "\n";
    }
  }
  for (std::size_t i = 0; i < a.components.size(); ++i) {
    if (!a.components[i].ears) continue;
    out += "ears " + std::to_string(i) + ": " + script_to_json(a.components[i].ears->script);
  }
  return out;
}

std::string error_report_json(const std::string& reason) {
  nlohmann::json doc;
  doc["status"] = "error";
  doc["reason"] = reason;
  return doc.dump(2) + "\n";
}

}  // namespace cyclecut
