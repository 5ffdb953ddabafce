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


#include "signocut/signocut.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <limits>
#include <new>
#include <span>
#include <string>
#include <vector>

#include "signocut/envelope.hpp"
#include "signocut/error.hpp"
#include "signocut/io.hpp"
#include "signocut/model.hpp"
#include "signocut/sbb.hpp"

struct sc_program {
  signocut::SignomialProgram program;
};

struct sc_report {
  signocut::SolveReport report;
};

namespace {

thread_local std::string g_last_error;

sc_status to_status(signocut::ErrorCode code) {
  using signocut::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument: return SC_ERR_INVALID_ARGUMENT;
    case ErrorCode::kDomain: return SC_ERR_DOMAIN;
    case ErrorCode::kUnbounded: return SC_ERR_UNBOUNDED;
    case ErrorCode::kNumerical: return SC_ERR_NUMERICAL;
    case ErrorCode::kDegenerate: return SC_ERR_DEGENERATE;
    case ErrorCode::kTrivialCut: return SC_ERR_TRIVIAL_CUT;
    case ErrorCode::kSupermodularity: return SC_ERR_SUPERMODULARITY;
    case ErrorCode::kUnbranchable: return SC_ERR_UNBRANCHABLE;
    case ErrorCode::kParse: return SC_ERR_PARSE;
    case ErrorCode::kIo: return SC_ERR_IO;
    case ErrorCode::kInternal: return SC_ERR_INTERNAL;
  }
  return SC_ERR_INTERNAL;
}

sc_status fail(sc_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <typename F>
sc_status guarded(F&& body) {
  try {
    body();
    return SC_OK;
  } catch (const signocut::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SC_ERR_INTERNAL, "unknown exception");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

signocut::CutMode to_mode(sc_mode mode) {
  switch (mode) {
    case SC_MODE_DISABLE: return signocut::CutMode::kDisable;
    case SC_MODE_OC: return signocut::CutMode::kOc;
    case SC_MODE_IC: return signocut::CutMode::kIc;
    case SC_MODE_OIC: return signocut::CutMode::kOic;
  }
  throw signocut::Error(signocut::ErrorCode::kInvalidArgument, "unknown cut mode");
}

signocut::Settings to_settings(const sc_settings& s) {
  signocut::Settings out;
  out.mode = to_mode(s.mode);
  out.max_cut_rounds = s.max_cut_rounds;
  out.cut_violation_min = s.cut_violation_min;
  out.time_limit = s.time_limit;
  out.gap_tol = s.gap_tol;
  out.node_limit = s.node_limit;
  out.seed = s.seed;
  out.max_envelope_dim = s.max_envelope_dim;
  out.feas_tol = s.feas_tol;
  return out;
}

#define SC_REQUIRE(cond, msg) \
  do {                        \
    if (!(cond)) return fail(SC_ERR_INVALID_ARGUMENT, msg); \
  } while (0)

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

extern "C" {

const char* sc_version(void) { return "1.0.0"; }

const char* sc_status_name(sc_status status) {
  switch (status) {
    case SC_OK: return "ok";
    case SC_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case SC_ERR_DOMAIN: return "domain";
    case SC_ERR_UNBOUNDED: return "unbounded";
    case SC_ERR_NUMERICAL: return "numerical";
    case SC_ERR_DEGENERATE: return "degenerate";
    case SC_ERR_TRIVIAL_CUT: return "trivial_cut";
    case SC_ERR_SUPERMODULARITY: return "supermodularity_violated";
    case SC_ERR_UNBRANCHABLE: return "unbranchable";
    case SC_ERR_PARSE: return "parse";
    case SC_ERR_IO: return "io";
    case SC_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* sc_last_error_message(void) { return g_last_error.c_str(); }

void sc_string_free(char* text) { std::free(text); }

sc_status sc_program_read(const char* path, sc_program** out) {
  SC_REQUIRE(path != nullptr && out != nullptr, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new sc_program{signocut::read_program(path)}; });
}

sc_status sc_program_from_string(const char* text, sc_program** out) {
  SC_REQUIRE(text != nullptr && out != nullptr, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new sc_program{signocut::parse_program(text)}; });
}

sc_status sc_program_generate(uint64_t seed, int n, int k, int max_degree, double density,
                              sc_program** out) {
  SC_REQUIRE(out != nullptr, "null argument");
  *out = nullptr;
  return guarded([&] {
    signocut::GeneratorOptions o;
    o.seed = seed;
    o.n = n;
    o.k = k;
    o.max_degree = max_degree;
    o.density = density;
    *out = new sc_program{signocut::generate_program(o)};
  });
}

sc_status sc_program_serialize(const sc_program* program, char** out_text) {
  SC_REQUIRE(program != nullptr && out_text != nullptr, "null argument");
  *out_text = nullptr;
  return guarded([&] { *out_text = copy_string(signocut::serialize_program(program->program)); });
}

sc_status sc_program_write(const sc_program* program, const char* path) {
  SC_REQUIRE(program != nullptr && path != nullptr, "null argument");
  return guarded([&] { signocut::write_program(path, program->program); });
}

sc_status sc_program_dims(const sc_program* program, int* n, int* k, int* m) {
  SC_REQUIRE(program != nullptr, "null program");
  if (n) *n = program->program.n;
  if (k) *k = program->program.k;
  if (m) *m = program->program.m;
  return SC_OK;
}

void sc_program_free(sc_program* program) { delete program; }

void sc_settings_default(sc_settings* settings) {
  if (settings == nullptr) return;
  const signocut::Settings d;
  settings->mode = SC_MODE_OIC;
  settings->max_cut_rounds = d.max_cut_rounds;
  settings->cut_violation_min = d.cut_violation_min;
  settings->time_limit = d.time_limit;
  settings->gap_tol = d.gap_tol;
  settings->node_limit = d.node_limit;
  settings->seed = d.seed;
  settings->max_envelope_dim = d.max_envelope_dim;
  settings->feas_tol = d.feas_tol;
}

sc_status sc_mode_parse(const char* text, sc_mode* out) {
  SC_REQUIRE(text != nullptr && out != nullptr, "null argument");
  const auto mode = signocut::parse_cut_mode(text);
  if (!mode) {
    return fail(SC_ERR_INVALID_ARGUMENT,
                std::string("unknown mode '") + text + "' (expected disable, oc, ic or oic)");
  }
  *out = static_cast<sc_mode>(*mode);
  return SC_OK;
}

const char* sc_mode_name(sc_mode mode) {
  try {
    return signocut::cut_mode_name(to_mode(mode));
  } catch (...) {
    return "unknown";
  }
}

sc_status sc_solve(const sc_program* program, const sc_settings* settings, sc_report** out) {
  SC_REQUIRE(program != nullptr && out != nullptr, "null argument");
  *out = nullptr;
  return guarded([&] {
    signocut::Settings s;
    if (settings != nullptr) s = to_settings(*settings);
    *out = new sc_report{signocut::solve(program->program, s)};
  });
}

void sc_report_free(sc_report* report) { delete report; }

sc_solve_status sc_report_status(const sc_report* report) {
  if (report == nullptr) return SC_SOLVE_INFEASIBLE;
  return static_cast<sc_solve_status>(report->report.status);
}

const char* sc_report_status_name(const sc_report* report) {
  if (report == nullptr) return "unknown";
  return signocut::solve_status_name(report->report.status);
}

double sc_report_best_bound(const sc_report* r) { return r ? r->report.best_bound : kNaN; }
double sc_report_incumbent_value(const sc_report* r) { return r ? r->report.incumbent_value : kNaN; }

int sc_report_incumbent(const sc_report* r, double* x, int capacity) {
  if (r == nullptr) return 0;
  const auto& inc = r->report.incumbent;
  if (x != nullptr) {
    for (int j = 0; j < capacity && j < static_cast<int>(inc.size()); ++j) {
      x[j] = inc[static_cast<std::size_t>(j)];
    }
  }
  return static_cast<int>(inc.size());
}

int64_t sc_report_node_count(const sc_report* r) { return r ? r->report.node_count : 0; }
double sc_report_wall_time(const sc_report* r) { return r ? r->report.wall_time : kNaN; }
double sc_report_rel_gap(const sc_report* r) { return r ? r->report.rel_gap : kNaN; }

int64_t sc_report_cuts(const sc_report* r, sc_mode origin) {
  if (r == nullptr) return 0;
  const auto& c = r->report.cuts_added;
  switch (origin) {
    case SC_MODE_IC: return c.intersection;
    case SC_MODE_OC: return c.outer_approx;
    case SC_MODE_OIC: return c.intersection + c.outer_approx;
    case SC_MODE_DISABLE: return 0;
  }
  return 0;
}

double sc_report_root_initial_bound(const sc_report* r) {
  return r ? r->report.root_initial_bound : kNaN;
}

double sc_report_root_final_bound(const sc_report* r) {
  return r ? r->report.root_final_bound : kNaN;
}

sc_status sc_report_to_json(const sc_report* report, char** out_json) {
  SC_REQUIRE(report != nullptr && out_json != nullptr, "null argument");
  *out_json = nullptr;
  return guarded([&] { *out_json = copy_string(signocut::report_to_json(report->report)); });
}

sc_status sc_separate(const sc_program* program, const double* z, int dim, sc_mode mode,
                      char** out_json) {
  SC_REQUIRE(program != nullptr && z != nullptr && out_json != nullptr, "null argument");
  SC_REQUIRE(dim >= 0, "negative dimension");
  *out_json = nullptr;
  return guarded([&] {
    signocut::Settings s;
    s.mode = to_mode(mode);
    const std::span<const double> point(z, static_cast<std::size_t>(dim));
    const auto result = signocut::separate_point(program->program, point, s);
    *out_json = copy_string(signocut::separation_to_json(result, point));
  });
}

sc_status sc_envelope(const double* beta, int h, const double* lower, const double* upper,
                      const double* at, double* value, double* facet_a, double* facet_b) {
  SC_REQUIRE(h >= 0, "negative dimension");
  SC_REQUIRE(h == 0 || (beta != nullptr && lower != nullptr && upper != nullptr && at != nullptr),
             "null argument");
  SC_REQUIRE(value != nullptr, "null value pointer");
  return guarded([&] {
    const auto hh = static_cast<std::size_t>(h);
    signocut::EnvelopeModel model(std::vector<double>(beta, beta + hh),
                                  signocut::Box(std::vector<double>(lower, lower + hh),
                                                std::vector<double>(upper, upper + hh)));
    const auto env = signocut::envelope_value(model, std::span<const double>(at, hh));
    *value = env.value;
    if (facet_a != nullptr) {
      for (std::size_t j = 0; j < hh; ++j) facet_a[j] = env.facet.a[j];
    }
    if (facet_b != nullptr) *facet_b = env.facet.b;
  });
}

sc_status sc_shifted_geometric_mean(const double* values, int count, double shift,
                                    double* out) {
  SC_REQUIRE(count >= 0 && (count == 0 || values != nullptr) && out != nullptr, "null argument");
  return guarded([&] {
    *out = signocut::shifted_geometric_mean(
        std::span<const double>(values, static_cast<std::size_t>(count)), shift);
  });
}

}  // extern "C"
