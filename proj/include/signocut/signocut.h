// Copyright 2026 The signocut Authors
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


/* C interface to the signocut library.
 *
 * Objects are opaque handles released with the matching *_free call.
 * Functions returning sc_status report failures through the code and
 * sc_last_error_message(), which is per thread and valid until the next
 * failing call on that thread. Strings returned through char** are owned
 * by the caller and released with sc_string_free. */

#ifndef SIGNOCUT_H_
#define SIGNOCUT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SC_API __declspec(dllexport)
#else
#define SC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sc_status {
  SC_OK = 0,
  SC_ERR_INVALID_ARGUMENT = 1,
  SC_ERR_DOMAIN = 2,
  SC_ERR_UNBOUNDED = 3,
  SC_ERR_NUMERICAL = 4,
  SC_ERR_DEGENERATE = 5,
  SC_ERR_TRIVIAL_CUT = 6,
  SC_ERR_SUPERMODULARITY = 7,
  SC_ERR_UNBRANCHABLE = 8,
  SC_ERR_PARSE = 9,
  SC_ERR_IO = 10,
  SC_ERR_INTERNAL = 11
} sc_status;

typedef enum sc_mode {
  SC_MODE_DISABLE = 0,
  SC_MODE_OC = 1,
  SC_MODE_IC = 2,
  SC_MODE_OIC = 3
} sc_mode;

typedef enum sc_solve_status {
  SC_SOLVE_OPTIMAL = 0,
  SC_SOLVE_INFEASIBLE = 1,
  SC_SOLVE_TIME_LIMIT = 2,
  SC_SOLVE_NODE_LIMIT = 3
} sc_solve_status;

typedef struct sc_program sc_program;
typedef struct sc_report sc_report;

typedef struct sc_settings {
  sc_mode mode;
  int max_cut_rounds;
  double cut_violation_min;
  double time_limit;
  double gap_tol;
  int64_t node_limit;
  uint64_t seed;
  int max_envelope_dim;
  double feas_tol;
} sc_settings;

SC_API const char* sc_version(void);
SC_API const char* sc_status_name(sc_status status);
SC_API const char* sc_last_error_message(void);
SC_API void sc_string_free(char* text);

SC_API sc_status sc_program_read(const char* path, sc_program** out);
SC_API sc_status sc_program_from_string(const char* text, sc_program** out);
SC_API sc_status sc_program_generate(uint64_t seed, int n, int k, int max_degree,
                                     double density, sc_program** out);
SC_API sc_status sc_program_serialize(const sc_program* program, char** out_text);
SC_API sc_status sc_program_write(const sc_program* program, const char* path);
SC_API sc_status sc_program_dims(const sc_program* program, int* n, int* k, int* m);
SC_API void sc_program_free(sc_program* program);

SC_API void sc_settings_default(sc_settings* settings);
SC_API sc_status sc_mode_parse(const char* text, sc_mode* out);
SC_API const char* sc_mode_name(sc_mode mode);

SC_API sc_status sc_solve(const sc_program* program, const sc_settings* settings,
                          sc_report** out);
SC_API void sc_report_free(sc_report* report);
SC_API sc_solve_status sc_report_status(const sc_report* report);
SC_API const char* sc_report_status_name(const sc_report* report);
SC_API double sc_report_best_bound(const sc_report* report);
/* +inf when no feasible point was found. */
SC_API double sc_report_incumbent_value(const sc_report* report);
/* Copies up to capacity coordinates of the incumbent x; returns its length
 * (0 when there is none). */
SC_API int sc_report_incumbent(const sc_report* report, double* x, int capacity);
SC_API int64_t sc_report_node_count(const sc_report* report);
SC_API double sc_report_wall_time(const sc_report* report);
SC_API double sc_report_rel_gap(const sc_report* report);
SC_API int64_t sc_report_cuts(const sc_report* report, sc_mode origin);
SC_API double sc_report_root_initial_bound(const sc_report* report);
SC_API double sc_report_root_final_bound(const sc_report* report);
SC_API sc_status sc_report_to_json(const sc_report* report, char** out_json);

/* Separates cuts at a point z = (x, y) of length n + k against the root
 * relaxation. Intersection cuts need z to be a vertex of that relaxation.
 * The result is a JSON document. */
SC_API sc_status sc_separate(const sc_program* program, const double* z, int dim,
                             sc_mode mode, char** out_json);

/* Convex envelope of u^beta over [lower, upper] at `at`. facet_a receives h
 * slopes; the facet is facet_a . u + *facet_b. */
SC_API sc_status sc_envelope(const double* beta, int h, const double* lower,
                             const double* upper, const double* at, double* value,
                             double* facet_a, double* facet_b);

SC_API sc_status sc_shifted_geometric_mean(const double* values, int count, double shift,
                                           double* out);

#ifdef __cplusplus
}
#endif

#endif /* SIGNOCUT_H_ */
