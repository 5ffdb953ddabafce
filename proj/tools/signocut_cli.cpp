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


#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "signocut/signocut.h"

namespace {

struct CliError {
  int code;
  std::string message;
};

void check(sc_status status, const std::string& what) {
  if (status != SC_OK) {
    throw CliError{1, what + ": " + sc_status_name(status) + ": " + sc_last_error_message()};
  }
}

std::vector<double> parse_csv(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (tok.empty() || end != tok.c_str() + tok.size()) {
      throw CliError{2, flag + ": invalid number '" + tok + "'"};
    }
    out.push_back(v);
  }
  return out;
}

sc_mode parse_mode(const std::string& text) {
  sc_mode mode;
  check(sc_mode_parse(text.c_str(), &mode), "--mode");
  return mode;
}

uint64_t effective_seed(uint64_t flag_seed) {
  if (const char* env = std::getenv("SIGNOCUT_SEED"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') throw CliError{2, "SIGNOCUT_SEED must be an unsigned integer"};
    return v;
  }
  return flag_seed;
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  sc_string_free(s);
  return out;
}

sc_program* load(const std::string& path) {
  sc_program* p = nullptr;
  check(sc_program_read(path.c_str(), &p), "reading " + path);
  return p;
}

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

struct SolveOptions {
  std::string file;
  std::string mode = "oic";
  double time_limit = 60.0;
  double gap_tol = 1e-4;
  uint64_t seed = 0;
  int64_t node_limit = 200000;
  std::string json_out;
};

int run_solve(const SolveOptions& o) {
  sc_program* program = load(o.file);
  sc_settings s;
  sc_settings_default(&s);
  s.mode = parse_mode(o.mode);
  s.time_limit = o.time_limit;
  s.gap_tol = o.gap_tol;
  s.seed = effective_seed(o.seed);
  s.node_limit = o.node_limit;
  sc_report* report = nullptr;
  const sc_status st = sc_solve(program, &s, &report);
  sc_program_free(program);
  check(st, "solve");
  // The text summary would corrupt JSON written to stdout.
  if (o.json_out != "-") {
    std::cout << "status      " << sc_report_status_name(report) << "\n"
              << "objective   " << fmt(sc_report_incumbent_value(report)) << "\n"
              << "best_bound  " << fmt(sc_report_best_bound(report)) << "\n"
              << "rel_gap     " << fmt(sc_report_rel_gap(report)) << "\n"
              << "nodes       " << sc_report_node_count(report) << "\n"
              << "cuts        ic=" << sc_report_cuts(report, SC_MODE_IC)
              << " oc=" << sc_report_cuts(report, SC_MODE_OC) << "\n"
              << "time        " << fmt(sc_report_wall_time(report)) << " s\n";
    const int len = sc_report_incumbent(report, nullptr, 0);
    if (len > 0) {
      std::vector<double> x(static_cast<std::size_t>(len));
      sc_report_incumbent(report, x.data(), len);
      std::cout << "x          ";
      for (double v : x) std::cout << ' ' << fmt(v);
      std::cout << "\n";
    }
  }
  if (!o.json_out.empty()) {
    char* json = nullptr;
    const sc_status js = sc_report_to_json(report, &json);
    if (js != SC_OK) sc_report_free(report);
    check(js, "report");
    const std::string text = take_string(json);
    if (o.json_out == "-") {
      std::cout << text << "\n";
    } else {
      std::ofstream out(o.json_out);
      out << text << "\n";
      if (!out) {
        sc_report_free(report);
        throw CliError{1, "cannot write " + o.json_out};
      }
    }
  }
  sc_report_free(report);
  return 0;
}

int run_separate(const std::string& file, const std::string& point, const std::string& mode) {
  sc_program* program = load(file);
  const auto z = parse_csv(point, "--point");
  char* json = nullptr;
  const sc_status st =
      sc_separate(program, z.data(), static_cast<int>(z.size()), parse_mode(mode), &json);
  sc_program_free(program);
  check(st, "separate");
  std::cout << take_string(json) << "\n";
  return 0;
}

int run_envelope(const std::string& beta_s, const std::string& box_s, const std::string& at_s,
                 bool as_json) {
  const auto beta = parse_csv(beta_s, "--beta");
  const auto box = parse_csv(box_s, "--box");
  const auto at = parse_csv(at_s, "--at");
  if (box.size() != 2 * beta.size() || at.size() != beta.size()) {
    throw CliError{2, "--box needs lo,hi per coordinate and --at one value per coordinate"};
  }
  std::vector<double> lo, hi;
  for (std::size_t j = 0; j < beta.size(); ++j) {
    lo.push_back(box[2 * j]);
    hi.push_back(box[2 * j + 1]);
  }
  double value = 0.0;
  double b = 0.0;
  std::vector<double> a(beta.size());
  check(sc_envelope(beta.data(), static_cast<int>(beta.size()), lo.data(), hi.data(), at.data(),
                    &value, a.data(), &b),
        "envelope");
  if (as_json) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["value"] = value;
    j["facet"] = {{"a", a}, {"b", b}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "value " << fmt(value) << "\nfacet a=";
    for (std::size_t t = 0; t < a.size(); ++t) std::cout << (t ? "," : "") << fmt(a[t]);
    std::cout << " b=" << fmt(b) << "\n";
  }
  return 0;
}

struct GenerateOptions {
  uint64_t seed = 0;
  int n = 3;
  int k = 3;
  int degree = 3;
  double density = 0.67;
  int count = 1;
  std::string out_dir;
};

int run_generate(const GenerateOptions& o) {
  const uint64_t seed = effective_seed(o.seed);
  if (o.count < 1) throw CliError{2, "--count must be positive"};
  if (o.out_dir.empty() && o.count != 1) throw CliError{2, "--count > 1 needs --out-dir"};
  if (!o.out_dir.empty()) std::filesystem::create_directories(o.out_dir);
  for (int i = 0; i < o.count; ++i) {
    sc_program* p = nullptr;
    check(sc_program_generate(seed + static_cast<uint64_t>(i), o.n, o.k, o.degree, o.density, &p),
          "generate");
    if (o.out_dir.empty()) {
      char* text = nullptr;
      const sc_status st = sc_program_serialize(p, &text);
      sc_program_free(p);
      check(st, "serialize");
      std::cout << take_string(text);
    } else {
      char name[64];
      std::snprintf(name, sizeof name, "gen_%03d.sp", i);
      const std::string path = (std::filesystem::path(o.out_dir) / name).string();
      const sc_status st = sc_program_write(p, path.c_str());
      sc_program_free(p);
      check(st, "write " + path);
    }
  }
  return 0;
}

struct BenchOptions {
  std::string dir;
  std::string modes = "disable,oc,ic,oic";
  double time_limit = 60.0;
  uint64_t seed = 0;
  std::string json_out;
};

double sgm(const std::vector<double>& v, double shift) {
  double out = std::numeric_limits<double>::quiet_NaN();
  check(sc_shifted_geometric_mean(v.data(), static_cast<int>(v.size()), shift, &out), "sgm");
  return out;
}

int run_bench(const BenchOptions& o) {
  std::vector<std::string> files;
  for (const auto& entry : std::filesystem::directory_iterator(o.dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".sp") {
      files.push_back(entry.path().string());
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw CliError{1, "no .sp instances in " + o.dir};
  std::vector<std::string> mode_names;
  {
    std::stringstream ss(o.modes);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      parse_mode(tok);
      mode_names.push_back(tok);
    }
  }
  const uint64_t seed = effective_seed(o.seed);
  nlohmann::json doc;
  doc["schema_version"] = 1;
  doc["instances"] = files;
  doc["shifts"] = {{"time", 1.0}, {"nodes", 100.0}, {"gap_percent", 1.0}};
  doc["modes"] = nlohmann::json::array();
  std::printf("%-8s %10s %12s %10s %8s %8s\n", "mode", "time_sgm", "nodes_sgm", "gap%_sgm",
              "solved", "runs");
  for (const auto& name : mode_names) {
    std::vector<double> times, nodes, gaps;
    int solved = 0;
    nlohmann::json runs = nlohmann::json::array();
    for (const auto& f : files) {
      sc_program* p = load(f);
      sc_settings s;
      sc_settings_default(&s);
      s.mode = parse_mode(name);
      s.time_limit = o.time_limit;
      s.seed = seed;
      sc_report* r = nullptr;
      const sc_status st = sc_solve(p, &s, &r);
      sc_program_free(p);
      check(st, "solve " + f);
      const double gap = sc_report_rel_gap(r);
      const double gap_pct = std::isfinite(gap) ? std::min(100.0, std::max(0.0, 100.0 * gap)) : 100.0;
      times.push_back(sc_report_wall_time(r));
      nodes.push_back(static_cast<double>(sc_report_node_count(r)));
      gaps.push_back(gap_pct);
      if (sc_report_status(r) == SC_SOLVE_OPTIMAL) ++solved;
      runs.push_back({{"instance", f},
                      {"status", sc_report_status_name(r)},
                      {"time", times.back()},
                      {"nodes", nodes.back()},
                      {"gap_percent", gap_pct}});
      sc_report_free(r);
    }
    const double ts = sgm(times, 1.0);
    const double ns = sgm(nodes, 100.0);
    const double gs = sgm(gaps, 1.0);
    std::printf("%-8s %10.4f %12.2f %10.4f %8d %8zu\n", name.c_str(), ts, ns, gs, solved,
                files.size());
    doc["modes"].push_back({{"mode", name},
                            {"time_sgm", ts},
                            {"nodes_sgm", ns},
                            {"gap_percent_sgm", gs},
                            {"solved", solved},
                            {"runs", runs}});
  }
  if (!o.json_out.empty()) {
    std::ofstream out(o.json_out);
    out << doc.dump(2) << "\n";
    if (!out) throw CliError{1, "cannot write " + o.json_out};
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signomial cutting-plane toolkit"};
  app.require_subcommand(1);

  SolveOptions solve_opts;
  auto* solve = app.add_subcommand("solve", "Solve an instance by branch and bound");
  solve->add_option("file", solve_opts.file, "Instance file")->required()->check(CLI::ExistingFile);
  solve->add_option("--mode", solve_opts.mode, "Cut setting: disable, oc, ic, oic")
      ->capture_default_str();
  solve->add_option("--time-limit", solve_opts.time_limit, "Seconds")->capture_default_str();
  solve->add_option("--gap-tol", solve_opts.gap_tol, "Relative gap tolerance")->capture_default_str();
  solve->add_option("--seed", solve_opts.seed, "Random seed (SIGNOCUT_SEED overrides)")
      ->capture_default_str();
  solve->add_option("--node-limit", solve_opts.node_limit, "Node limit")->capture_default_str();
  solve->add_option("--json-out", solve_opts.json_out, "Write the JSON report here ('-' for stdout)");

  std::string sep_file, sep_point, sep_mode = "oic";
  auto* separate = app.add_subcommand("separate", "Print the cuts separated at a point z = (x, y)");
  separate->add_option("file", sep_file, "Instance file")->required()->check(CLI::ExistingFile);
  separate->add_option("--point", sep_point, "Comma-separated z")->required();
  separate->add_option("--mode", sep_mode, "Cut setting")->capture_default_str();

  std::string env_beta, env_box, env_at;
  bool env_json = false;
  auto* envelope = app.add_subcommand("envelope", "Convex envelope of u^beta over a box");
  envelope->add_option("--beta", env_beta, "Comma-separated exponents")->required();
  envelope->add_option("--box", env_box, "lo1,hi1,lo2,hi2,...")->required();
  envelope->add_option("--at", env_at, "Query point")->required();
  envelope->add_flag("--json", env_json, "Print JSON");

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Write random instances");
  generate->add_option("--seed", gen.seed, "First seed")->capture_default_str();
  generate->add_option("--n", gen.n, "Variables")->capture_default_str();
  generate->add_option("--k", gen.k, "Terms")->capture_default_str();
  generate->add_option("--degree", gen.degree, "Largest |exponent|")->capture_default_str();
  generate->add_option("--density", gen.density, "Support fraction")->capture_default_str();
  generate->add_option("--count", gen.count, "Number of instances")->capture_default_str();
  generate->add_option("--out-dir", gen.out_dir, "Directory (stdout when omitted)");

  BenchOptions bench_opts;
  auto* bench = app.add_subcommand("bench", "Compare cut settings by shifted geometric means");
  bench->add_option("--dir", bench_opts.dir, "Directory of .sp instances")
      ->required()
      ->check(CLI::ExistingDirectory);
  bench->add_option("--modes", bench_opts.modes, "Comma-separated settings")->capture_default_str();
  bench->add_option("--time-limit", bench_opts.time_limit, "Seconds per run")->capture_default_str();
  bench->add_option("--seed", bench_opts.seed, "Random seed")->capture_default_str();
  bench->add_option("--json-out", bench_opts.json_out, "Write the full table as JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return run_solve(solve_opts);
    if (*separate) return run_separate(sep_file, sep_point, sep_mode);
    if (*envelope) return run_envelope(env_beta, env_box, env_at, env_json);
    if (*generate) return run_generate(gen);
    if (*bench) return run_bench(bench_opts);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
