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

#include "cyclecut/cyclecut.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "cyclecut/analysis.hpp"
#include "cyclecut/construction.hpp"
#include "cyclecut/multigraph.hpp"
#include "cyclecut/oracle.hpp"
#include "cyclecut/recognizer.hpp"
#include "cyclecut/reduction.hpp"

struct cc_graph {
  cyclecut::Multigraph g;
};

struct cc_analysis {
  cyclecut::Analysis a;
  std::vector<std::vector<std::uint32_t>> cycle_ids;
};

struct cc_script {
  cyclecut::EarScript s;
};

namespace {

thread_local std::string last_error;

cc_status fail(cc_status code, const std::string& message) {
  last_error = message;
  return code;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

// Maps library exceptions to status codes.
template <typename F>
cc_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return CC_OK;
  } catch (const cyclecut::ParseError& e) {
    return fail(CC_ERR_PARSE, e.what());
  } catch (const cyclecut::ScriptError& e) {
    return fail(CC_ERR_SCRIPT, e.what());
  } catch (const cyclecut::OracleError& e) {
    return fail(CC_ERR_LIMIT, e.what());
  } catch (const cyclecut::GraphError& e) {
    return fail(CC_ERR_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CC_ERR_INTERNAL, e.what());
  }
}

}  // namespace

extern "C" {

const char* cc_last_error(void) { return last_error.c_str(); }

void cc_string_free(char* s) { std::free(s); }

cc_status cc_graph_parse(const char* text, size_t len, cc_graph** out) {
  if ((text == nullptr && len != 0) || out == nullptr) return fail(CC_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    auto g = cyclecut::parse_graph(std::string_view(text == nullptr ? "" : text, len));
    *out = new cc_graph{std::move(g)};
  });
}

cc_status cc_graph_read_file(const char* path, cc_graph** out) {
  if (path == nullptr || out == nullptr) return fail(CC_ERR_ARGUMENT, "null argument");
  std::ifstream in(path, std::ios::binary);
  if (!in) return fail(CC_ERR_IO, std::string("cannot open ") + path + ": " + std::strerror(errno));
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return fail(CC_ERR_IO, std::string("cannot read ") + path);
  const std::string text = buf.str();
  return cc_graph_parse(text.data(), text.size(), out);
}

cc_status cc_graph_counts(const cc_graph* g, size_t* nodes, size_t* edges) {
  if (g == nullptr) return fail(CC_ERR_ARGUMENT, "null graph");
  if (nodes != nullptr) *nodes = g->g.node_count();
  if (edges != nullptr) *edges = g->g.edge_count();
  return CC_OK;
}

cc_status cc_graph_to_text(const cc_graph* g, char** out) {
  if (g == nullptr || out == nullptr) return fail(CC_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = dup_string(cyclecut::serialize_graph(g->g)); });
}

void cc_graph_free(cc_graph* g) { delete g; }

cc_status cc_analyze(const cc_graph* g, unsigned options, cc_analysis** out) {
  if (g == nullptr || out == nullptr) return fail(CC_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    cyclecut::AnalysisOptions opts;
    opts.cycles = (options & CC_WANT_CYCLES) != 0;
    opts.ears = (options & CC_WANT_EARS) != 0;
    auto* result = new cc_analysis{cyclecut::analyze(g->g, opts), {}};
    if (result->a.cycles) {
      for (const auto& walk : result->a.cycles->cycles) {
        std::vector<std::uint32_t> ids;
        ids.reserve(walk.size());
        for (const auto& oe : walk) ids.push_back(oe.edge);
        result->cycle_ids.push_back(std::move(ids));
      }
    }
    *out = result;
  });
}

int cc_analysis_decomposable(const cc_analysis* a) { return a != nullptr && a->a.decomposable ? 1 : 0; }

uint64_t cc_analysis_c(const cc_analysis* a) { return a == nullptr ? 0 : a->a.c; }

const char* cc_analysis_reason(const cc_analysis* a) { return a == nullptr ? "" : a->a.reason.c_str(); }

size_t cc_analysis_cycle_count(const cc_analysis* a) { return a == nullptr ? 0 : a->cycle_ids.size(); }

cc_status cc_analysis_cycle(const cc_analysis* a, size_t i, const uint32_t** edges, size_t* len) {
  if (a == nullptr || edges == nullptr || len == nullptr) return fail(CC_ERR_ARGUMENT, "null argument");
  if (i >= a->cycle_ids.size()) return fail(CC_ERR_ARGUMENT, "cycle index out of range");
  *edges = a->cycle_ids[i].data();
  *len = a->cycle_ids[i].size();
  return CC_OK;
}

cc_status cc_analysis_to_json(const cc_analysis* a, char** out) {
  if (a == nullptr || out == nullptr) return fail(CC_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = dup_string(cyclecut::analysis_to_json(a->a)); });
}

cc_status cc_analysis_to_text(const cc_analysis* a, char** out) {
  if (a == nullptr || out == nullptr) return fail(CC_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = dup_string(cyclecut::analysis_to_text(a->a)); });
}

void cc_analysis_free(cc_analysis* a) { delete a; }

cc_status cc_error_report_json(const char* reason, char** out) {
  if (reason == nullptr || out == nullptr) return fail(CC_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = dup_string(cyclecut::error_report_json(reason)); });
}

cc_status cc_check(const cc_graph* g, cc_check_report* out) {
  if (g == nullptr || out == nullptr) return fail(CC_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const cyclecut::RecognitionReport r = cyclecut::is_double_ear_decomposable(g->g);
    out->degrees_ok = r.degrees.ok ? 1 : 0;
    out->bad_node = r.degrees.node;
    out->bad_degree = static_cast<uint32_t>(r.degrees.degree);
    out->connected = r.connected ? 1 : 0;
    out->treewidth_le2 = r.treewidth_le2 ? 1 : 0;
    out->verdict = r.verdict ? 1 : 0;
  });
}

cc_status cc_script_random(uint64_t seed, uint32_t ears, uint32_t subdivisions, cc_script** out) {
  if (out == nullptr) return fail(CC_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = new cc_script{cyclecut::random_script(seed, ears, subdivisions)}; });
}

cc_status cc_script_from_json(const char* text, size_t len, cc_script** out) {
  if (text == nullptr || out == nullptr) return fail(CC_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = new cc_script{cyclecut::script_from_json(std::string_view(text, len))}; });
}

cc_status cc_script_to_json(const cc_script* s, char** out) {
  if (s == nullptr || out == nullptr) return fail(CC_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = dup_string(cyclecut::script_to_json(s->s)); });
}

uint64_t cc_script_expected_c(const cc_script* s) { return s == nullptr ? 0 : s->s.expected_c(); }

cc_status cc_script_apply(const cc_script* s, cc_graph** out) {
  if (s == nullptr || out == nullptr) return fail(CC_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = new cc_graph{cyclecut::apply_script(s->s).graph}; });
}

void cc_script_free(cc_script* s) { delete s; }

cc_status cc_oracle(const cc_graph* g, size_t max_edges, uint64_t* c_min) {
  if (g == nullptr || c_min == nullptr) return fail(CC_ERR_ARGUMENT, "null argument");
  return guarded([&] { *c_min = cyclecut::brute_force_c(g->g, max_edges).c_min; });
}

cc_status cc_bench_graph(uint64_t seed, size_t target_edges, cc_graph** out) {
  if (out == nullptr) return fail(CC_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new cc_graph{cyclecut::apply_script(cyclecut::random_script_for_edges(seed, target_edges)).graph};
  });
}

cc_status cc_run_timed(const cc_graph* g, uint64_t* c, double* seconds) {
  if (g == nullptr || c == nullptr || seconds == nullptr) return fail(CC_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const auto start = std::chrono::steady_clock::now();
    const cyclecut::DecompositionResult r = cyclecut::run(g->g);
    const auto stop = std::chrono::steady_clock::now();
    *seconds = std::chrono::duration<double>(stop - start).count();
    *c = r.decomposable() ? r.success().c : 0;
  });
}

}  // extern "C"
