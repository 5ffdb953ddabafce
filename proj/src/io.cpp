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


#include "signocut/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "signocut/error.hpp"

namespace signocut {

namespace {

std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class LineParser {
 public:
  LineParser(std::string_view source, int line, std::vector<std::string_view> fields)
      : source_(source), line_(line), fields_(std::move(fields)) {}

  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << source_ << ":" << line_ << ": " << msg;
    throw Error(ErrorCode::kParse, os.str());
  }

  std::size_t size() const { return fields_.size(); }
  std::string_view field(std::size_t i) const { return fields_[i]; }

  void expect_count(std::size_t count) const {
    if (fields_.size() != count) {
      std::ostringstream os;
      os << "'" << fields_[0] << "' expects " << count - 1 << " values, got " << fields_.size() - 1;
      fail(os.str());
    }
  }

  double number(std::size_t i, std::string_view what) const {
    return to_number(fields_.at(i), i, what);
  }

  double to_number(std::string_view tok, std::size_t i, std::string_view what) const {
    double v = 0.0;
    std::string_view t = tok;
    if (!t.empty() && t.front() == '+') t.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || std::isnan(v)) {
      std::ostringstream os;
      os << "field " << i << " (" << what << "): invalid number '" << tok << "'";
      fail(os.str());
    }
    return v;
  }

  int index(std::size_t i, std::string_view what, int limit) const {
    const std::string_view tok = fields_.at(i);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      std::ostringstream os;
      os << "field " << i << " (" << what << "): invalid integer '" << tok << "'";
      fail(os.str());
    }
    if (v < 0 || (limit >= 0 && v >= limit)) {
      std::ostringstream os;
      os << "field " << i << " (" << what << "): " << v << " is out of range";
      if (limit >= 0) os << " [0, " << limit << ")";
      fail(os.str());
    }
    return v;
  }

 private:
  std::string_view source_;
  int line_;
  std::vector<std::string_view> fields_;
};

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

SignomialProgram parse_program(std::string_view text, std::string_view source) {
  SignomialProgram p;
  std::optional<int> n, k, m;
  bool have_format = false;
  bool have_objective = false;
  std::vector<bool> have_bound, have_term, have_rhs;
  auto require_dims = [&](const LineParser& lp) {
    if (!n || !k || !m) lp.fail("'n', 'k' and 'm' must precede indexed entries");
  };
  auto init = [&] {
    p.n = *n;
    p.k = *k;
    p.m = *m;
    p.c.assign(static_cast<std::size_t>(p.n), 0.0);
    p.d.assign(static_cast<std::size_t>(p.m), 0.0);
    p.terms.assign(static_cast<std::size_t>(p.k), ExponentVector());
    p.bounds = Box(std::vector<double>(static_cast<std::size_t>(p.n), 0.0),
                   std::vector<double>(static_cast<std::size_t>(p.n), 0.0));
    p.A.rows = p.m;
    p.A.cols = p.n;
    p.B.rows = p.m;
    p.B.cols = p.k;
    have_bound.assign(static_cast<std::size_t>(p.n), false);
    have_term.assign(static_cast<std::size_t>(p.k), false);
    have_rhs.assign(static_cast<std::size_t>(p.m), false);
  };
  bool initialized = false;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto fields = split_fields(line);
    if (fields.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const LineParser lp(source, line_no, fields);
    const std::string_view key = fields[0];
    if (key == "format") {
      lp.expect_count(3);
      if (fields[1] != "signocut" || fields[2] != "1") lp.fail("unsupported format header");
      have_format = true;
    } else if (key == "n" || key == "k" || key == "m") {
      lp.expect_count(2);
      if (initialized) lp.fail("dimension line after indexed entries");
      const int v = lp.index(1, key, -1);
      auto& slot = key == "n" ? n : key == "k" ? k : m;
      if (slot) lp.fail(std::string("repeated '") + std::string(key) + "'");
      slot = v;
    } else {
      require_dims(lp);
      if (!initialized) {
        init();
        initialized = true;
      }
      if (key == "objective") {
        lp.expect_count(static_cast<std::size_t>(p.n) + 1);
        if (have_objective) lp.fail("repeated 'objective'");
        for (int j = 0; j < p.n; ++j) {
          p.c[static_cast<std::size_t>(j)] = lp.number(static_cast<std::size_t>(j) + 1, "objective");
          if (!std::isfinite(p.c[static_cast<std::size_t>(j)])) lp.fail("objective must be finite");
        }
        have_objective = true;
      } else if (key == "bound") {
        lp.expect_count(4);
        const int j = lp.index(1, "variable", p.n);
        if (have_bound[static_cast<std::size_t>(j)]) lp.fail("repeated bound for variable " + std::to_string(j));
        p.bounds.lower[static_cast<std::size_t>(j)] = lp.number(2, "lower");
        p.bounds.upper[static_cast<std::size_t>(j)] = lp.number(3, "upper");
        have_bound[static_cast<std::size_t>(j)] = true;
      } else if (key == "term") {
        if (lp.size() < 3) lp.fail("'term' expects an index and at least one var:exponent pair");
        const int i = lp.index(1, "term", p.k);
        if (have_term[static_cast<std::size_t>(i)]) lp.fail("repeated term " + std::to_string(i));
        std::vector<VarPower> entries;
        for (std::size_t f = 2; f < lp.size(); ++f) {
          const std::string_view tok = lp.field(f);
          const auto colon = tok.find(':');
          if (colon == std::string_view::npos) {
            lp.fail("field " + std::to_string(f) + " (exponent): expected var:exponent, got '" +
                    std::string(tok) + "'");
          }
          const std::string_view vtok = tok.substr(0, colon);
          int var = 0;
          const auto [ptr, ec] = std::from_chars(vtok.data(), vtok.data() + vtok.size(), var);
          if (ec != std::errc() || ptr != vtok.data() + vtok.size() || var < 0 || var >= p.n) {
            lp.fail("field " + std::to_string(f) + " (variable): invalid variable '" +
                    std::string(vtok) + "'");
          }
          const double e = lp.to_number(tok.substr(colon + 1), f, "exponent");
          if (!std::isfinite(e)) lp.fail("field " + std::to_string(f) + " (exponent): not finite");
          entries.push_back({var, e});
        }
        try {
          p.terms[static_cast<std::size_t>(i)] = ExponentVector(std::move(entries));
        } catch (const Error& err) {
          lp.fail(err.what());
        }
        if (p.terms[static_cast<std::size_t>(i)].empty()) lp.fail("term has no nonzero exponent");
        have_term[static_cast<std::size_t>(i)] = true;
      } else if (key == "A") {
        lp.expect_count(4);
        const int r = lp.index(1, "row", p.m);
        const int c = lp.index(2, "column", p.n);
        const double v = lp.number(3, "value");
        if (!std::isfinite(v)) lp.fail("matrix entries must be finite");
        p.A.add(r, c, v);
      } else if (key == "B") {
        lp.expect_count(4);
        const int r = lp.index(1, "row", p.m);
        const int c = lp.index(2, "term", p.k);
        const double v = lp.number(3, "value");
        if (!std::isfinite(v)) lp.fail("matrix entries must be finite");
        p.B.add(r, c, v);
      } else if (key == "rhs") {
        lp.expect_count(3);
        const int r = lp.index(1, "row", p.m);
        if (have_rhs[static_cast<std::size_t>(r)]) lp.fail("repeated rhs for row " + std::to_string(r));
        p.d[static_cast<std::size_t>(r)] = lp.number(2, "rhs");
        have_rhs[static_cast<std::size_t>(r)] = true;
      } else {
        lp.fail("unknown keyword '" + std::string(key) + "'");
      }
    }
    if (end == text.size()) break;
  }
  const std::string where(source);
  if (!have_format) throw Error(ErrorCode::kParse, where + ": missing 'format signocut 1' header");
  if (!n || !k || !m) throw Error(ErrorCode::kParse, where + ": missing 'n', 'k' or 'm'");
  if (!initialized) init();
  for (int j = 0; j < p.n; ++j) {
    if (!have_bound[static_cast<std::size_t>(j)]) {
      throw Error(ErrorCode::kParse, where + ": missing bound for variable " + std::to_string(j));
    }
  }
  for (int i = 0; i < p.k; ++i) {
    if (!have_term[static_cast<std::size_t>(i)]) {
      throw Error(ErrorCode::kParse, where + ": missing term " + std::to_string(i));
    }
  }
  p.A.normalize();
  p.B.normalize();
  try {
    p.validate();
  } catch (const Error& err) {
    throw Error(ErrorCode::kParse, where + ": " + err.what());
  }
  return p;
}

SignomialProgram read_program(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_program(ss.str(), path);
}

std::string serialize_program(const SignomialProgram& program) {
  SignomialProgram p = program;
  p.A.normalize();
  p.B.normalize();
  std::ostringstream os;
  os << "format signocut 1\n";
  os << "n " << p.n << "\nk " << p.k << "\nm " << p.m << "\n";
  os << "objective";
  for (double v : p.c) os << ' ' << fmt(v);
  os << "\n";
  for (int j = 0; j < p.n; ++j) {
    os << "bound " << j << ' ' << fmt(p.bounds.lower[static_cast<std::size_t>(j)]) << ' '
       << fmt(p.bounds.upper[static_cast<std::size_t>(j)]) << "\n";
  }
  for (int i = 0; i < p.k; ++i) {
    os << "term " << i;
    for (const VarPower& e : p.terms[static_cast<std::size_t>(i)].entries()) {
      os << ' ' << e.var << ':' << fmt(e.exponent);
    }
    os << "\n";
  }
  for (const Triplet& t : p.A.entries) os << "A " << t.row << ' ' << t.col << ' ' << fmt(t.value) << "\n";
  for (const Triplet& t : p.B.entries) os << "B " << t.row << ' ' << t.col << ' ' << fmt(t.value) << "\n";
  for (int i = 0; i < p.m; ++i) os << "rhs " << i << ' ' << fmt(p.d[static_cast<std::size_t>(i)]) << "\n";
  return os.str();
}

void write_program(const std::string& path, const SignomialProgram& program) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  out << serialize_program(program);
  if (!out) throw Error(ErrorCode::kIo, "write failed for '" + path + "'");
}

SignomialProgram generate_program(const GeneratorOptions& o) {
  if (o.n <= 0 || o.k < 0 || o.max_degree <= 0 || !(o.density > 0.0) || o.density > 1.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "generator needs n > 0, k >= 0, max_degree > 0 and density in (0, 1]");
  }
  std::mt19937_64 rng(o.seed);
  auto uniform = [&](double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); };

  SignomialProgram p;
  p.n = o.n;
  p.k = o.k;
  p.m = o.k + 1;
  const auto n = static_cast<std::size_t>(p.n);
  p.bounds = Box(std::vector<double>(n), std::vector<double>(n));
  for (std::size_t j = 0; j < n; ++j) {
    const double lo = uniform(0.1, 2.0);
    p.bounds.lower[j] = lo;
    p.bounds.upper[j] = std::min(5.0, lo + uniform(0.5, 3.0));
  }
  const int support =
      std::max(1, static_cast<int>(std::lround(o.density * static_cast<double>(p.n))));
  std::uniform_int_distribution<int> degree(1, o.max_degree);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<int> vars(n);
  for (int i = 0; i < p.k; ++i) {
    std::iota(vars.begin(), vars.end(), 0);
    std::shuffle(vars.begin(), vars.end(), rng);
    std::vector<VarPower> entries;
    for (int s = 0; s < support; ++s) {
      const int e = degree(rng) * (coin(rng) ? 1 : -1);
      entries.push_back({vars[static_cast<std::size_t>(s)], static_cast<double>(e)});
    }
    p.terms.push_back(ExponentVector(std::move(entries)));
  }
  p.c.resize(n);
  for (double& v : p.c) v = uniform(-1.0, 1.0);

  std::vector<double> x0(n);
  for (std::size_t j = 0; j < n; ++j) {
    x0[j] = p.bounds.lower[j] + uniform(0.2, 0.8) * p.bounds.width(j);
  }
  std::vector<double> g0(static_cast<std::size_t>(p.k));
  std::vector<double> scale(static_cast<std::size_t>(p.k));
  for (int i = 0; i < p.k; ++i) {
    const auto ii = static_cast<std::size_t>(i);
    g0[ii] = eval_term(p.terms[ii], x0);
    const Interval r = term_range(p.terms[ii], p.bounds);
    scale[ii] = std::max({std::abs(r.lo), std::abs(r.hi), 1e-12});
  }
  p.A.rows = p.m;
  p.A.cols = p.n;
  p.B.rows = p.m;
  p.B.cols = p.k;
  p.d.resize(static_cast<std::size_t>(p.m));
  for (int r = 0; r < p.m; ++r) {
    double act = 0.0;
    for (int j = 0; j < p.n; ++j) {
      if (uniform(0.0, 1.0) < 0.7) {
        const double a = uniform(-1.0, 1.0);
        p.A.add(r, j, a);
        act += a * x0[static_cast<std::size_t>(j)];
      }
    }
    for (int i = 0; i < p.k; ++i) {
      if (i == r || (r == p.m - 1 && uniform(0.0, 1.0) < 0.5)) {
        double b = uniform(0.2, 1.0) * (coin(rng) ? 1.0 : -1.0);
        b /= scale[static_cast<std::size_t>(i)];
        p.B.add(r, i, b);
        act += b * g0[static_cast<std::size_t>(i)];
      }
    }
    p.d[static_cast<std::size_t>(r)] = act + uniform(0.05, 0.3);
  }
  p.A.normalize();
  p.B.normalize();
  p.validate();
  return p;
}

std::string report_to_json(const SolveReport& r, int indent) {
  using nlohmann::json;
  auto num = [](double v) -> json { return std::isfinite(v) ? json(v) : json(nullptr); };
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["status"] = solve_status_name(r.status);
  j["mode"] = cut_mode_name(r.mode);
  j["seed"] = r.seed;
  j["best_bound"] = num(r.best_bound);
  j["incumbent_value"] = num(r.incumbent_value);
  j["incumbent"] = r.incumbent;
  j["node_count"] = r.node_count;
  j["wall_time"] = r.wall_time;
  j["rel_gap"] = num(r.rel_gap);
  j["cuts_added"] = {{"intersection", r.cuts_added.intersection},
                     {"outer_approx", r.cuts_added.outer_approx},
                     {"linearization", r.cuts_added.linearization}};
  j["root_initial_bound"] = num(r.root_initial_bound);
  j["root_final_bound"] = num(r.root_final_bound);
  j["root_cuts"] = r.root_cuts;
  j["lp_solves"] = r.lp_solves;
  j["lp_iterations"] = r.lp_iterations;
  return j.dump(indent);
}

std::string separation_to_json(const SeparationResult& result, std::span<const double> z,
                               int indent) {
  using nlohmann::json;
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["point"] = std::vector<double>(z.begin(), z.end());
  j["violations"] = json::array();
  for (const TermViolation& tv : result.violations) {
    j["violations"].push_back(
        {{"term", tv.term}, {"sense", sense_name(tv.sense)}, {"residual", tv.residual}});
  }
  j["cone_available"] = result.cone_available;
  if (!result.cone_message.empty()) j["cone_message"] = result.cone_message;
  j["cuts"] = json::array();
  for (const PointCut& pc : result.cuts) {
    json terms = json::array();
    for (std::size_t t = 0; t < pc.cut.index.size(); ++t) {
      terms.push_back({{"index", pc.cut.index[t]}, {"value", pc.cut.value[t]}});
    }
    j["cuts"].push_back({{"term", pc.term},
                         {"sense", sense_name(pc.sense)},
                         {"origin", cut_origin_name(pc.cut.origin)},
                         {"coefficients", terms},
                         {"rhs", pc.cut.rhs},
                         {"violation", pc.cut.violation(z)}});
  }
  return j.dump(indent);
}

double shifted_geometric_mean(std::span<const double> values, double shift) {
  if (values.empty()) throw Error(ErrorCode::kInvalidArgument, "no values to average");
  double s = 0.0;
  for (double v : values) {
    if (!(v + shift > 0.0)) {
      throw Error(ErrorCode::kInvalidArgument, "value plus shift must be positive");
    }
    s += std::log(v + shift);
  }
  return std::exp(s / static_cast<double>(values.size())) - shift;
}

}  // namespace signocut
