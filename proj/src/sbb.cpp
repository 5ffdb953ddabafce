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


#include "signocut/sbb.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <set>

#include "signocut/dcc.hpp"
#include "signocut/envelope.hpp"
#include "signocut/error.hpp"
#include "signocut/free_set.hpp"
#include "signocut/intersection_cut.hpp"

namespace signocut {

namespace {

constexpr double kDedupQuantum = 1e-9;
constexpr double kTightTol = 1e-6;
constexpr double kMaxCutRange = 1e9;

using CutKey = std::vector<long long>;

CutKey cut_key(const Cut& cut) {
  const double m = std::max(cut.max_abs_coeff(), 1e-300);
  CutKey key;
  key.reserve(2 * cut.index.size() + 1);
  for (std::size_t t = 0; t < cut.index.size(); ++t) {
    key.push_back(cut.index[t]);
    key.push_back(std::llround(cut.value[t] / m / kDedupQuantum));
  }
  key.push_back(std::llround(cut.rhs / m / kDedupQuantum));
  return key;
}

// Largest over smallest nonzero coefficient magnitude at most kMaxCutRange.
bool well_scaled(const Cut& cut) {
  double lo = kLpInf, hi = 0.0;
  for (double v : cut.value) {
    lo = std::min(lo, std::abs(v));
    hi = std::max(hi, std::abs(v));
  }
  return hi > 0.0 && hi <= kMaxCutRange * lo && std::isfinite(cut.rhs);
}

void rescale(Cut& cut) {
  const double m = cut.max_abs_coeff();
  for (double& v : cut.value) v /= m;
  cut.rhs /= m;
  cut.violation_at_source /= m;
}

LpModel node_lp(const LpModel& base, const Node& node) {
  LpModel lp = base;
  lp.col_lower = node.box.lower;
  lp.col_upper = node.box.upper;
  for (const Cut& cut : node.cuts) {
    LpRow row;
    row.index = cut.index;
    row.value = cut.value;
    row.upper = cut.rhs;
    lp.add_row(std::move(row));
  }
  return lp;
}

std::vector<double> random_point(const Box& box, std::mt19937_64& rng) {
  std::vector<double> p(box.dim());
  for (std::size_t j = 0; j < box.dim(); ++j) {
    std::uniform_real_distribution<double> dist(box.lower[j], box.upper[j]);
    p[j] = dist(rng);
  }
  return p;
}

// Orders the open-node heap so that the front is the smallest bound, then
// the deepest node, then the oldest.
struct NodeAfter {
  bool operator()(const Node& a, const Node& b) const {
    if (a.lp_bound != b.lp_bound) return a.lp_bound > b.lp_bound;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.id > b.id;
  }
};

}  // namespace

const char* cut_mode_name(CutMode mode) {
  switch (mode) {
    case CutMode::kDisable: return "disable";
    case CutMode::kOc: return "oc";
    case CutMode::kIc: return "ic";
    case CutMode::kOic: return "oic";
  }
  return "unknown";
}

std::optional<CutMode> parse_cut_mode(std::string_view text) {
  if (text == "disable") return CutMode::kDisable;
  if (text == "oc") return CutMode::kOc;
  if (text == "ic") return CutMode::kIc;
  if (text == "oic") return CutMode::kOic;
  return std::nullopt;
}

const char* solve_status_name(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kInfeasible: return "infeasible";
    case SolveStatus::kTimeLimit: return "time_limit";
    case SolveStatus::kNodeLimit: return "node_limit";
  }
  return "unknown";
}

void Settings::validate() const {
  if (!(gap_tol > 0.0)) throw Error(ErrorCode::kInvalidArgument, "gap_tol must be positive");
  if (!(cut_violation_min >= 1e-6)) {
    throw Error(ErrorCode::kInvalidArgument, "cut_violation_min must be at least 1e-6");
  }
  if (max_cut_rounds < 0) {
    throw Error(ErrorCode::kInvalidArgument, "max_cut_rounds must be nonnegative");
  }
  if (!(time_limit > 0.0)) throw Error(ErrorCode::kInvalidArgument, "time_limit must be positive");
  if (node_limit <= 0) throw Error(ErrorCode::kInvalidArgument, "node_limit must be positive");
  if (!(feas_tol > 0.0)) throw Error(ErrorCode::kInvalidArgument, "feas_tol must be positive");
  if (max_envelope_dim < 0 || max_envelope_dim > kEnvelopeMaxDim) {
    throw Error(ErrorCode::kInvalidArgument, "max_envelope_dim out of range");
  }
  if (max_inherited_cuts < 0) {
    throw Error(ErrorCode::kInvalidArgument, "max_inherited_cuts must be nonnegative");
  }
  if (!(branch_min_width > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "branch_min_width must be positive");
  }
}

void CutCounts::add(CutOrigin origin, std::int64_t count) {
  switch (origin) {
    case CutOrigin::kIntersection: intersection += count; break;
    case CutOrigin::kOuterApprox: outer_approx += count; break;
    case CutOrigin::kLinearization: linearization += count; break;
  }
}

double relative_gap(double incumbent, double bound) {
  if (!std::isfinite(incumbent) || !std::isfinite(bound)) return kLpInf;
  return (incumbent - bound) / std::max(1e-9, std::abs(incumbent));
}

LpModel build_root_relaxation(const ExtendedForm& ext, const Settings& settings) {
  const SignomialProgram& p = ext.base;
  LpModel lp(ext.dim());
  for (int j = 0; j < p.n; ++j) lp.objective[static_cast<std::size_t>(j)] = p.c[static_cast<std::size_t>(j)];
  lp.col_lower = ext.zbounds.lower;
  lp.col_upper = ext.zbounds.upper;

  std::vector<LpRow> rows(static_cast<std::size_t>(p.m));
  for (const Triplet& t : p.A.entries) {
    rows[static_cast<std::size_t>(t.row)].index.push_back(t.col);
    rows[static_cast<std::size_t>(t.row)].value.push_back(t.value);
  }
  for (const Triplet& t : p.B.entries) {
    rows[static_cast<std::size_t>(t.row)].index.push_back(ext.y_index(t.col));
    rows[static_cast<std::size_t>(t.row)].value.push_back(t.value);
  }
  for (int i = 0; i < p.m; ++i) {
    rows[static_cast<std::size_t>(i)].upper = p.d[static_cast<std::size_t>(i)];
    lp.add_row(std::move(rows[static_cast<std::size_t>(i)]));
  }

  std::mt19937_64 rng(settings.seed);
  std::vector<std::vector<double>> points;
  std::vector<double> center(static_cast<std::size_t>(ext.dim()));
  for (std::size_t j = 0; j < center.size(); ++j) {
    center[j] = 0.5 * (ext.zbounds.lower[j] + ext.zbounds.upper[j]);
  }
  points.push_back(std::move(center));
  for (int r = 0; r < 2; ++r) points.push_back(random_point(ext.zbounds, rng));

  for (int i = 0; i < p.k; ++i) {
    for (Sense sense : {Sense::kEpi, Sense::kHypo}) {
      const DccForm form = make_dcc(p.terms[static_cast<std::size_t>(i)], sense, ext.y_index(i));
      if (classify(form) != ConvexityClass::kConvex) continue;
      for (const auto& point : points) {
        std::vector<double> v;
        for (int idx : form.v_index) v.push_back(point[static_cast<std::size_t>(idx)]);
        const AffineFunction lin = linearize_power(form.gamma, clamp_positive(v));
        // psi_beta(u) <= lin(v), with psi_beta either u_0 or the constant 1.
        std::vector<double> coeffs(static_cast<std::size_t>(ext.dim()), 0.0);
        double rhs = lin.constant;
        if (form.beta.empty()) {
          rhs -= 1.0;
        } else {
          coeffs[static_cast<std::size_t>(form.u_index[0])] += 1.0;
        }
        for (std::size_t j = 0; j < lin.coeffs.size(); ++j) {
          coeffs[static_cast<std::size_t>(form.v_index[j])] -= lin.coeffs[j];
        }
        lp.add_dense_row(coeffs, -kLpInf, rhs);
      }
    }
  }
  return lp;
}

CutLoopResult cut_loop(const ExtendedForm& ext, const LpModel& base, Node& node,
                       const Settings& settings) {
  CutLoopResult res;
  std::set<CutKey> seen;
  for (const Cut& c : node.cuts) seen.insert(cut_key(c));
  const bool use_ic = settings.mode == CutMode::kIc || settings.mode == CutMode::kOic;
  const bool use_oc = settings.mode == CutMode::kOc || settings.mode == CutMode::kOic;

  std::size_t last_round_cuts = 0;
  for (int round = 0;; ++round) {
    LpModel lp = node_lp(base, node);
    LpBasisSolution sol;
    bool failed = false;
    try {
      sol = solve(lp);
    } catch (const Error& e) {
      if (round == 0 || e.code() != ErrorCode::kNumerical) throw;
      failed = true;
    }
    if (!failed && round > 0 && sol.status != LpStatus::kOptimal &&
        sol.status != LpStatus::kInfeasible) {
      failed = true;
    }
    if (failed) {
      // Undo the round that broke the LP and keep the previous solution.
      for (std::size_t c = 0; c < last_round_cuts; ++c) {
        res.counts.add(node.cuts.back().origin, -1);
        node.cuts.pop_back();
        res.new_cuts.pop_back();
      }
      break;
    }
    res.lp = std::move(lp);
    res.solution = std::move(sol);
    if (res.solution.status == LpStatus::kInfeasible) {
      res.infeasible = true;
      return res;
    }
    if (res.solution.status != LpStatus::kOptimal) {
      throw Error(ErrorCode::kNumerical,
                  std::string("node LP ended with status ") + lp_status_name(res.solution.status));
    }
    if (round == 0) res.initial_bound = res.solution.objective_value;
    res.rounds = round;
    if (settings.mode == CutMode::kDisable || round >= settings.max_cut_rounds) break;

    const std::vector<double>& zbar = res.solution.zbar;
    auto violations = violated_terms(ext, zbar, settings.feas_tol);
    if (violations.empty()) break;
    std::stable_sort(violations.begin(), violations.end(),
                     [](const TermViolation& a, const TermViolation& b) { return a.term < b.term; });

    std::optional<SimplicialCone> cone;
    bool cone_failed = false;
    std::vector<Cut> fresh;
    auto consider = [&](Cut cut) {
      if (!(cut.normalized_violation(zbar) >= settings.cut_violation_min)) return;
      if (!well_scaled(cut)) return;
      rescale(cut);
      if (!seen.insert(cut_key(cut)).second) return;
      fresh.push_back(std::move(cut));
    };
    for (const TermViolation& tv : violations) {
      if (use_ic) {
        if (!cone && !cone_failed) {
          try {
            cone = extract_cone(res.lp, res.solution);
          } catch (const Error&) {
            cone_failed = true;
          }
        }
        if (cone) {
          try {
            const FreeSetCertificate cert = term_certificate(ext, tv, zbar);
            if (membership(cert, zbar) == Membership::kInterior) consider(build_cut(*cone, cert));
          } catch (const Error&) {
            // no intersection cut for this term in this round
          }
        }
      }
      if (use_oc) {
        const DccForm form =
            make_dcc(ext.base.terms[static_cast<std::size_t>(tv.term)], tv.sense, ext.y_index(tv.term));
        if (static_cast<int>(form.h()) <= settings.max_envelope_dim) {
          try {
            if (auto cut = oa_cut(form, zbar, node.box)) consider(std::move(*cut));
          } catch (const Error&) {
          }
        }
      }
    }
    if (fresh.empty()) break;
    last_round_cuts = fresh.size();
    for (Cut& c : fresh) {
      res.counts.add(c.origin);
      res.new_cuts.push_back(c);
      node.cuts.push_back(std::move(c));
    }
  }
  return res;
}

std::pair<Node, Node> branch(const ExtendedForm& ext, const Node& node,
                             std::span<const double> zbar, double tol, double min_width) {
  const auto violations = violated_terms(ext, zbar, tol);
  if (violations.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "branching needs a violated term");
  }
  const ExponentVector& alpha = ext.base.terms[static_cast<std::size_t>(violations.front().term)];
  int var = -1;
  double best = 0.0;
  for (const VarPower& e : alpha.entries()) {
    const auto j = static_cast<std::size_t>(e.var);
    const double w = node.box.width(j);
    if (!(w >= min_width)) continue;
    const double score = std::abs(e.exponent) * w;
    if (score > best) {
      best = score;
      var = e.var;
    }
  }
  if (var < 0) {
    throw Error(ErrorCode::kUnbranchable, "every branching candidate is too narrow");
  }
  const auto j = static_cast<std::size_t>(var);
  const double lo = node.box.lower[j];
  const double hi = node.box.upper[j];
  const double w = hi - lo;
  const double split = std::clamp(zbar[j], lo + 0.2 * w, hi - 0.2 * w);

  auto make_child = [&](double clo, double chi) {
    Node child;
    child.depth = node.depth + 1;
    child.lp_bound = node.lp_bound;
    const auto n = static_cast<std::size_t>(ext.base.n);
    Box xbox(std::vector<double>(node.box.lower.begin(), node.box.lower.begin() + static_cast<long>(n)),
             std::vector<double>(node.box.upper.begin(), node.box.upper.begin() + static_cast<long>(n)));
    xbox.lower[j] = clo;
    xbox.upper[j] = chi;
    const Box lifted = lifted_bounds(ext.base, xbox);
    child.box = node.box;
    for (std::size_t c = 0; c < child.box.dim(); ++c) {
      child.box.lower[c] = std::max(child.box.lower[c], lifted.lower[c]);
      child.box.upper[c] = std::min(child.box.upper[c], lifted.upper[c]);
      if (child.box.lower[c] > child.box.upper[c]) child.box.lower[c] = child.box.upper[c];
    }
    return child;
  };
  return {make_child(lo, split), make_child(split, hi)};
}

bool is_feasible(const SignomialProgram& program, std::span<const double> x, double tol) {
  if (static_cast<int>(x.size()) != program.n) return false;
  for (int j = 0; j < program.n; ++j) {
    const auto jj = static_cast<std::size_t>(j);
    const double slack = tol * (1.0 + std::abs(x[jj]));
    if (x[jj] < program.bounds.lower[jj] - slack || x[jj] > program.bounds.upper[jj] + slack) {
      return false;
    }
  }
  std::vector<double> xc(x.begin(), x.end());
  for (std::size_t j = 0; j < xc.size(); ++j) {
    xc[j] = std::clamp(xc[j], program.bounds.lower[j], program.bounds.upper[j]);
  }
  std::vector<double> y(static_cast<std::size_t>(program.k));
  for (int i = 0; i < program.k; ++i) {
    try {
      y[static_cast<std::size_t>(i)] = eval_term(program.terms[static_cast<std::size_t>(i)], xc);
    } catch (const Error&) {
      return false;
    }
    if (!std::isfinite(y[static_cast<std::size_t>(i)])) return false;
  }
  std::vector<double> act(static_cast<std::size_t>(program.m), 0.0);
  for (const Triplet& t : program.A.entries) {
    act[static_cast<std::size_t>(t.row)] += t.value * xc[static_cast<std::size_t>(t.col)];
  }
  for (const Triplet& t : program.B.entries) {
    act[static_cast<std::size_t>(t.row)] += t.value * y[static_cast<std::size_t>(t.col)];
  }
  for (int i = 0; i < program.m; ++i) {
    const double d = program.d[static_cast<std::size_t>(i)];
    if (act[static_cast<std::size_t>(i)] > d + tol * (1.0 + std::abs(d))) return false;
  }
  return true;
}

SolveReport solve(const SignomialProgram& program, const Settings& settings) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - start).count(); };

  settings.validate();
  program.validate();
  const ExtendedForm ext = lift(program);
  if (!ext.boxed()) {
    throw Error(ErrorCode::kUnbounded, "solve needs finite bounds on every variable and term");
  }
  const LpModel base = build_root_relaxation(ext, settings);

  SolveReport report;
  report.mode = settings.mode;
  report.seed = settings.seed;

  auto try_incumbent = [&](std::span<const double> x) {
    if (!is_feasible(program, x, settings.feas_tol)) return;
    std::vector<double> xc(x.begin(), x.end());
    for (std::size_t j = 0; j < xc.size(); ++j) {
      xc[j] = std::clamp(xc[j], program.bounds.lower[j], program.bounds.upper[j]);
    }
    double value = 0.0;
    for (std::size_t j = 0; j < xc.size(); ++j) value += program.c[j] * xc[j];
    if (value < report.incumbent_value) {
      report.incumbent_value = value;
      report.incumbent = std::move(xc);
    }
  };
  auto prune_level = [&] {
    const double inc = report.incumbent_value;
    return inc - settings.gap_tol * std::max(1.0, std::abs(inc));
  };

  std::vector<Node> open;
  Node root;
  root.box = ext.zbounds;
  open.push_back(std::move(root));
  std::int64_t next_id = 1;
  double fathomed_bound = kLpInf;  // smallest bound among nodes closed without proof of infeasibility
  bool limit_hit = false;
  SolveStatus limit_status = SolveStatus::kTimeLimit;

  while (!open.empty()) {
    if (elapsed() >= settings.time_limit) {
      limit_hit = true;
      limit_status = SolveStatus::kTimeLimit;
      break;
    }
    if (report.node_count >= settings.node_limit) {
      limit_hit = true;
      limit_status = SolveStatus::kNodeLimit;
      break;
    }
    std::pop_heap(open.begin(), open.end(), NodeAfter{});
    Node node = std::move(open.back());
    open.pop_back();
    if (std::isfinite(report.incumbent_value) && node.lp_bound >= prune_level()) {
      fathomed_bound = std::min(fathomed_bound, node.lp_bound);
      continue;
    }
    const bool is_root = report.node_count == 0;
    ++report.node_count;

    CutLoopResult res = cut_loop(ext, base, node, settings);
    report.lp_solves += res.rounds + 1;
    report.lp_iterations += res.solution.iterations;
    report.cuts_added.intersection += res.counts.intersection;
    report.cuts_added.outer_approx += res.counts.outer_approx;
    report.cuts_added.linearization += res.counts.linearization;
    if (settings.record_cuts) {
      for (const Cut& c : res.new_cuts) report.recorded_cuts.push_back({c, node.box});
    }
    if (is_root) {
      report.root_initial_bound = res.infeasible ? kLpInf : res.initial_bound;
      report.root_final_bound = res.infeasible ? kLpInf : res.solution.objective_value;
      report.root_cuts = static_cast<std::int64_t>(res.new_cuts.size());
    }
    if (res.infeasible) continue;

    const std::vector<double>& zbar = res.solution.zbar;
    node.lp_bound = std::max(node.lp_bound, res.solution.objective_value);
    try_incumbent(std::span<const double>(zbar.data(), static_cast<std::size_t>(program.n)));
    if (std::isfinite(report.incumbent_value) && node.lp_bound >= prune_level()) {
      fathomed_bound = std::min(fathomed_bound, node.lp_bound);
      continue;
    }

    std::pair<Node, Node> children;
    try {
      children = branch(ext, node, zbar, 0.0, settings.branch_min_width);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kUnbranchable && e.code() != ErrorCode::kInvalidArgument) throw;
      fathomed_bound = std::min(fathomed_bound, node.lp_bound);
      continue;
    }
    std::vector<Cut> inherited;
    for (const Cut& c : node.cuts) {
      if (std::abs(c.violation(zbar)) <= kTightTol * (1.0 + std::abs(c.rhs))) inherited.push_back(c);
    }
    if (static_cast<int>(inherited.size()) > settings.max_inherited_cuts) {
      inherited.erase(inherited.begin(),
                      inherited.end() - settings.max_inherited_cuts);
    }
    for (Node* child : {&children.first, &children.second}) {
      child->cuts = inherited;
      child->id = next_id++;
      open.push_back(std::move(*child));
      std::push_heap(open.begin(), open.end(), NodeAfter{});
    }
  }

  double bound = std::min(fathomed_bound, report.incumbent_value);
  for (const Node& n : open) bound = std::min(bound, n.lp_bound);
  report.best_bound = bound;
  if (limit_hit) {
    report.status = limit_status;
  } else if (report.has_incumbent()) {
    report.status = SolveStatus::kOptimal;
  } else {
    report.status = SolveStatus::kInfeasible;
  }
  if (report.status == SolveStatus::kInfeasible) report.best_bound = kLpInf;
  report.rel_gap = relative_gap(report.incumbent_value, report.best_bound);
  report.wall_time = elapsed();
  return report;
}

SeparationResult separate_point(const SignomialProgram& program, std::span<const double> z,
                                const Settings& settings) {
  settings.validate();
  program.validate();
  const ExtendedForm ext = lift(program);
  if (static_cast<int>(z.size()) != ext.dim()) {
    throw Error(ErrorCode::kInvalidArgument, "point must have n + k coordinates");
  }
  if (!ext.boxed()) throw Error(ErrorCode::kUnbounded, "separation needs finite bounds");
  const LpModel lp = build_root_relaxation(ext, settings);
  SeparationResult out;
  out.violations = violated_terms(ext, z, settings.feas_tol);
  std::stable_sort(out.violations.begin(), out.violations.end(),
                   [](const TermViolation& a, const TermViolation& b) { return a.term < b.term; });
  const bool use_ic = settings.mode == CutMode::kIc || settings.mode == CutMode::kOic;
  const bool use_oc = settings.mode == CutMode::kOc || settings.mode == CutMode::kOic;
  std::optional<SimplicialCone> cone;
  if (use_ic && !out.violations.empty()) {
    try {
      cone = cone_from_active(lp, z, 1e-9);
      out.cone_available = true;
    } catch (const Error& e) {
      out.cone_message = e.what();
    }
  }
  for (const TermViolation& tv : out.violations) {
    if (cone) {
      try {
        const FreeSetCertificate cert = term_certificate(ext, tv, z);
        if (membership(cert, z) == Membership::kInterior) {
          out.cuts.push_back({tv.term, tv.sense, build_cut(*cone, cert)});
        }
      } catch (const Error&) {
      }
    }
    if (use_oc) {
      const DccForm form =
          make_dcc(program.terms[static_cast<std::size_t>(tv.term)], tv.sense, ext.y_index(tv.term));
      if (static_cast<int>(form.h()) <= settings.max_envelope_dim) {
        try {
          if (auto cut = oa_cut(form, z, ext.zbounds)) {
            out.cuts.push_back({tv.term, tv.sense, std::move(*cut)});
          }
        } catch (const Error&) {
        }
      }
    }
  }
  return out;
}

}  // namespace signocut
