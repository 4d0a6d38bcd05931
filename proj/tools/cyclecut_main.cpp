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

// cyclecut command line tool. Talks to the library only through the C API.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cyclecut/cyclecut.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNo = 2;

struct GraphDeleter {
  void operator()(cc_graph* g) const { cc_graph_free(g); }
};
struct AnalysisDeleter {
  void operator()(cc_analysis* a) const { cc_analysis_free(a); }
};
struct ScriptDeleter {
  void operator()(cc_script* s) const { cc_script_free(s); }
};
struct StringDeleter {
  void operator()(char* s) const { cc_string_free(s); }
};
using GraphPtr = std::unique_ptr<cc_graph, GraphDeleter>;
using AnalysisPtr = std::unique_ptr<cc_analysis, AnalysisDeleter>;
using ScriptPtr = std::unique_ptr<cc_script, ScriptDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

int report_error(const std::string& message, bool json) {
  if (json) {
    char* text = nullptr;
    if (cc_error_report_json(message.c_str(), &text) == CC_OK) {
      StringPtr owned(text);
      std::cout << owned.get() << std::flush;
    }
  }
  std::cerr << "error: " << message << "\n";
  return kExitError;
}

GraphPtr load(const std::string& path, std::string* error) {
  cc_graph* g = nullptr;
  if (cc_graph_read_file(path.c_str(), &g) != CC_OK) {
    *error = std::string(path) + ": " + cc_last_error();
    return nullptr;
  }
  return GraphPtr(g);
}

bool write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text << std::flush;
    return static_cast<bool>(std::cout);
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

int cmd_decompose(const std::string& path, bool json, bool cycles, bool ears) {
  std::string error;
  GraphPtr g = load(path, &error);
  if (!g) return report_error(error, json);
  unsigned options = 0;
  if (cycles) options |= CC_WANT_CYCLES;
  if (ears) options |= CC_WANT_EARS;
  cc_analysis* raw = nullptr;
  if (cc_analyze(g.get(), options, &raw) != CC_OK) return report_error(cc_last_error(), json);
  AnalysisPtr a(raw);
  char* text = nullptr;
  const cc_status st = json ? cc_analysis_to_json(a.get(), &text) : cc_analysis_to_text(a.get(), &text);
  if (st != CC_OK) return report_error(cc_last_error(), json);
  StringPtr owned(text);
  std::cout << owned.get() << std::flush;
  return cc_analysis_decomposable(a.get()) ? kExitOk : kExitNo;
}

int cmd_check(const std::string& path) {
  std::string error;
  GraphPtr g = load(path, &error);
  if (!g) return report_error(error, false);
  cc_check_report r{};
  if (cc_check(g.get(), &r) != CC_OK) return report_error(cc_last_error(), false);
  if (r.verdict) {
    std::cout << "yes\n" << std::flush;
    return kExitOk;
  }
  std::string reason;
  if (!r.treewidth_le2) {
    reason = "treewidth > 2";
  } else if (!r.connected) {
    reason = "disconnected";
  } else {
    reason = "degree " + std::to_string(r.bad_degree) + " at node " + std::to_string(r.bad_node);
  }
  std::cout << "no: " << reason << "\n" << std::flush;
  return kExitNo;
}

int cmd_gen(std::uint64_t seed, std::uint32_t ears, std::uint32_t subdivisions, const std::string& out_path,
            const std::string& script_path) {
  cc_script* raw = nullptr;
  if (cc_script_random(seed, ears, subdivisions, &raw) != CC_OK) return report_error(cc_last_error(), false);
  ScriptPtr script(raw);
  cc_graph* graw = nullptr;
  if (cc_script_apply(script.get(), &graw) != CC_OK) return report_error(cc_last_error(), false);
  GraphPtr g(graw);

  char* text = nullptr;
  if (cc_graph_to_text(g.get(), &text) != CC_OK) return report_error(cc_last_error(), false);
  StringPtr graph_text(text);
  if (!write_file(out_path, graph_text.get())) return report_error("cannot write " + out_path, false);
  if (!script_path.empty()) {
    if (cc_script_to_json(script.get(), &text) != CC_OK) return report_error(cc_last_error(), false);
    StringPtr script_text(text);
    if (!write_file(script_path, script_text.get())) return report_error("cannot write " + script_path, false);
  }
  // Keep stdout clean for the graph when it goes there.
  std::ostream& info = out_path == "-" ? std::cerr : std::cout;
  info << "expected_c = " << cc_script_expected_c(script.get()) << "\n" << std::flush;
  return kExitOk;
}

std::size_t default_oracle_edges() {
  if (const char* env = std::getenv("CYCLECUT_MAX_ORACLE_EDGES")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return static_cast<std::size_t>(v);
    std::cerr << "warning: ignoring CYCLECUT_MAX_ORACLE_EDGES='" << env << "'\n";
  }
  return 16;
}

int cmd_oracle(const std::string& path, std::size_t max_edges) {
  std::string error;
  GraphPtr g = load(path, &error);
  if (!g) return report_error(error, false);
  std::uint64_t c = 0;
  if (cc_oracle(g.get(), max_edges, &c) != CC_OK) return report_error(cc_last_error(), false);
  std::cout << "c_min = " << c << "\n" << std::flush;
  return kExitOk;
}

int cmd_bench(const std::vector<std::size_t>& sizes, std::uint64_t seed, int repeats) {
  std::cout << "m,n,seconds,c\n";
  for (std::size_t target : sizes) {
    cc_graph* raw = nullptr;
    if (cc_bench_graph(seed, target, &raw) != CC_OK) return report_error(cc_last_error(), false);
    GraphPtr g(raw);
    std::size_t n = 0;
    std::size_t m = 0;
    cc_graph_counts(g.get(), &n, &m);
    double best = 0;
    std::uint64_t c = 0;
    for (int r = 0; r < std::max(repeats, 1); ++r) {
      double seconds = 0;
      if (cc_run_timed(g.get(), &c, &seconds) != CC_OK) return report_error(cc_last_error(), false);
      best = r == 0 ? seconds : std::min(best, seconds);
    }
    std::cout << m << "," << n << "," << best << "," << c << "\n" << std::flush;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum cycle decompositions of double ear decomposable multigraphs"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  std::string path;
  bool json = false;
  bool cycles = false;
  bool ears_flag = false;
  auto* decompose = app.add_subcommand("decompose", "Compute c(G) and optionally a minimum decomposition");
  decompose->add_option("file", path, "Edge-list file")->required();
  decompose->add_flag("--json", json, "Emit a JSON report");
  decompose->add_flag("--cycles", cycles, "Include the cycles as edge-id lists");
  decompose->add_flag("--ears", ears_flag, "Include a double ear construction script per component");
  decompose->callback([&] { exit_code = cmd_decompose(path, json, cycles, ears_flag); });

  auto* check = app.add_subcommand("check", "Structural test: connected, degrees 2/4, treewidth <= 2");
  check->add_option("file", path, "Edge-list file")->required();
  check->callback([&] { exit_code = cmd_check(path); });

  std::uint64_t seed = 1;
  std::uint32_t ears = 0;
  std::uint32_t subdivisions = 0;
  std::string out_path = "-";
  std::string script_path;
  auto* gen = app.add_subcommand("gen", "Generate a random double ear decomposable graph");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--ears", ears, "Number of double ears");
  gen->add_option("--subdivisions", subdivisions, "Number of subdivisions");
  gen->add_option("--out", out_path, "Graph output file ('-' for stdout)");
  gen->add_option("--script", script_path, "Ear script JSON output file");
  gen->callback([&] { exit_code = cmd_gen(seed, ears, subdivisions, out_path, script_path); });

  std::size_t max_edges = default_oracle_edges();
  auto* oracle = app.add_subcommand("oracle", "Exhaustive minimum cycle decomposition for small graphs");
  oracle->add_option("file", path, "Edge-list file")->required();
  oracle->add_option("--max-edges", max_edges, "Refuse graphs with more edges");
  oracle->callback([&] { exit_code = cmd_oracle(path, max_edges); });

  std::vector<std::size_t> sizes{10000, 100000, 1000000};
  int repeats = 1;
  auto* bench = app.add_subcommand("bench", "Time the reduction on generated graphs (CSV)");
  bench->add_option("--sizes", sizes, "Target edge counts")->delimiter(',');
  bench->add_option("--seed", seed, "Random seed");
  bench->add_option("--repeats", repeats, "Runs per size; the minimum is reported");
  bench->callback([&] { exit_code = cmd_bench(sizes, seed, repeats); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }
  return exit_code;
}
