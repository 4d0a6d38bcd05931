/* Copyright 2026 The cyclecut Authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to libcyclecut. All handles are opaque and owned by the
 * caller once returned; free them with the matching *_free function.
 * Strings returned through `char**` are freed with cc_string_free.
 * On any status other than CC_OK, cc_last_error() describes the problem
 * (per thread, valid until the next call on that thread). */

#ifndef CYCLECUT_CYCLECUT_H_
#define CYCLECUT_CYCLECUT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CC_API __declspec(dllexport)
#else
#define CC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cc_status {
  CC_OK = 0,
  CC_ERR_ARGUMENT = 1, /* null pointer, index out of range */
  CC_ERR_IO = 2,       /* file could not be read */
  CC_ERR_PARSE = 3,    /* malformed edge list */
  CC_ERR_SCRIPT = 4,   /* malformed or unreplayable ear script */
  CC_ERR_LIMIT = 5,    /* input beyond a configured bound */
  CC_ERR_INTERNAL = 6
} cc_status;

typedef struct cc_graph cc_graph;
typedef struct cc_analysis cc_analysis;
typedef struct cc_script cc_script;

CC_API const char* cc_last_error(void);
CC_API void cc_string_free(char* s);

/* ---- graphs ---- */

CC_API cc_status cc_graph_parse(const char* text, size_t len, cc_graph** out);
CC_API cc_status cc_graph_read_file(const char* path, cc_graph** out);
CC_API cc_status cc_graph_counts(const cc_graph* g, size_t* nodes, size_t* edges);
CC_API cc_status cc_graph_to_text(const cc_graph* g, char** out);
CC_API void cc_graph_free(cc_graph* g);

/* ---- decomposition ---- */

enum { CC_WANT_CYCLES = 1u, CC_WANT_EARS = 2u };

CC_API cc_status cc_analyze(const cc_graph* g, unsigned options, cc_analysis** out);
CC_API int cc_analysis_decomposable(const cc_analysis* a);
CC_API uint64_t cc_analysis_c(const cc_analysis* a);
/* Empty string when decomposable. Owned by the analysis. */
CC_API const char* cc_analysis_reason(const cc_analysis* a);
/* Zero unless CC_WANT_CYCLES was given. */
CC_API size_t cc_analysis_cycle_count(const cc_analysis* a);
/* Edge ids of cycle i in walk order. The array is owned by the analysis. */
CC_API cc_status cc_analysis_cycle(const cc_analysis* a, size_t i, const uint32_t** edges, size_t* len);
CC_API cc_status cc_analysis_to_json(const cc_analysis* a, char** out);
CC_API cc_status cc_analysis_to_text(const cc_analysis* a, char** out);
CC_API void cc_analysis_free(cc_analysis* a);

/* JSON report with status "error" for inputs that could not be read. */
CC_API cc_status cc_error_report_json(const char* reason, char** out);

/* ---- structural check ---- */

typedef struct cc_check_report {
  int degrees_ok;
  uint32_t bad_node; /* first node whose degree is not 2 or 4 */
  uint32_t bad_degree;
  int connected;
  int treewidth_le2;
  int verdict;
} cc_check_report;

CC_API cc_status cc_check(const cc_graph* g, cc_check_report* out);

/* ---- ear scripts ---- */

CC_API cc_status cc_script_random(uint64_t seed, uint32_t ears, uint32_t subdivisions, cc_script** out);
CC_API cc_status cc_script_from_json(const char* text, size_t len, cc_script** out);
CC_API cc_status cc_script_to_json(const cc_script* s, char** out);
CC_API uint64_t cc_script_expected_c(const cc_script* s);
CC_API cc_status cc_script_apply(const cc_script* s, cc_graph** out);
CC_API void cc_script_free(cc_script* s);

/* ---- exhaustive oracle ---- */

CC_API cc_status cc_oracle(const cc_graph* g, size_t max_edges, uint64_t* c_min);

/* ---- benchmarking ---- */

/* Random double ear decomposable graph with at least target_edges edges. */
CC_API cc_status cc_bench_graph(uint64_t seed, size_t target_edges, cc_graph** out);
/* Times the reduction alone. `c` is 0 when the graph is not decomposable. */
CC_API cc_status cc_run_timed(const cc_graph* g, uint64_t* c, double* seconds);

#ifdef __cplusplus
}
#endif

#endif /* CYCLECUT_CYCLECUT_H_ */
