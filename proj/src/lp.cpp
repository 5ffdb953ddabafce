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

#include "signocut/lp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "signocut/error.hpp"

namespace signocut {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kTieTol = 1e-12;
constexpr int kRefactorEvery = 64;

// In-place Gauss-Jordan inverse of a dense row-major n x n matrix.
// Returns false when a pivot falls below tol * (largest entry).
bool invert(std::vector<double>& a, int n, double tol = 1e-13) {
  std::vector<double> inv(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(i) * n + i] = 1.0;
  double scale = 0.0;
  for (double v : a) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return n == 0;
  auto at = [n](std::vector<double>& m, int r, int c) -> double& {
    return m[static_cast<std::size_t>(r) * n + c];
  };
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(at(a, r, col)) > std::abs(at(a, piv, col))) piv = r;
    }
    if (std::abs(at(a, piv, col)) <= tol * scale) return false;
    if (piv != col) {
      for (int c = 0; c < n; ++c) {
        std::swap(at(a, piv, c), at(a, col, c));
        std::swap(at(inv, piv, c), at(inv, col, c));
      }
    }
    const double p = at(a, col, col);
    for (int c = 0; c < n; ++c) {
      at(a, col, c) /= p;
      at(inv, col, c) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = at(a, r, col);
      if (f == 0.0) continue;
      for (int c = 0; c < n; ++c) {
        at(a, r, c) -= f * at(a, col, c);
        at(inv, r, c) -= f * at(inv, col, c);
      }
    }
  }
  a = std::move(inv);
  return true;
}

class Simplex {
 public:
  Simplex(const LpModel& model, const LpOptions& options);

  LpBasisSolution run();
  LpBasisSolution infeasible_after_phase_one(const LpBasisSolution& sol) const;

 private:
  enum class Phase { kOne, kTwo };

  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(m_) +
           static_cast<std::size_t>(c);
  }
  double a(int row, int col) const {
    return a_[static_cast<std::size_t>(col) * static_cast<std::size_t>(m_) +
              static_cast<std::size_t>(row)];
  }
  bool is_artificial(int j) const { return j >= n_ + m_; }

  void column(int j, std::vector<double>& out) const;
  void ftran(int j, std::vector<double>& alpha) const;
  void prices(std::vector<double>& y) const;
  double reduced_cost(int j, const std::vector<double>& y) const;
  void refactor();
  void recompute_basic_values();
  void pivot(int r, int q, const std::vector<double>& alpha);
  LpStatus iterate();
  void drive_out_artificials();

  const LpModel& model_;
  LpOptions options_;
  int m_ = 0;
  int n_ = 0;
  int total_ = 0;
  std::vector<double> a_;
  std::vector<double> lo_, up_, cost_, x_;
  std::vector<BasisStatus> status_;
  std::vector<int> head_;
  std::vector<double> binv_;
  std::vector<double> art_sign_;
  int iterations_ = 0;
  int since_refactor_ = 0;
};

Simplex::Simplex(const LpModel& model, const LpOptions& options)
    : model_(model), options_(options) {
  m_ = model.num_rows();
  n_ = model.num_cols();
  total_ = n_ + 2 * m_;
  if (static_cast<int>(model.col_lower.size()) != n_ ||
      static_cast<int>(model.col_upper.size()) != n_) {
    throw Error(ErrorCode::kInvalidArgument, "column bounds differ from objective length");
  }
  a_.assign(static_cast<std::size_t>(m_) * static_cast<std::size_t>(n_), 0.0);
  for (int i = 0; i < m_; ++i) {
    const LpRow& row = model.rows[static_cast<std::size_t>(i)];
    if (row.index.size() != row.value.size()) {
      throw Error(ErrorCode::kInvalidArgument, "row index/value length mismatch");
    }
    for (std::size_t t = 0; t < row.index.size(); ++t) {
      const int j = row.index[t];
      if (j < 0 || j >= n_) {
        throw Error(ErrorCode::kInvalidArgument, "row references a missing column");
      }
      a_[static_cast<std::size_t>(j) * static_cast<std::size_t>(m_) +
         static_cast<std::size_t>(i)] += row.value[t];
    }
  }
  lo_.resize(static_cast<std::size_t>(total_));
  up_.resize(static_cast<std::size_t>(total_));
  cost_.assign(static_cast<std::size_t>(total_), 0.0);
  x_.assign(static_cast<std::size_t>(total_), 0.0);
  status_.assign(static_cast<std::size_t>(total_), BasisStatus::kAtLower);
  art_sign_.assign(static_cast<std::size_t>(m_), 1.0);
  for (int j = 0; j < n_; ++j) {
    const auto jj = static_cast<std::size_t>(j);
    lo_[jj] = model.col_lower[jj];
    up_[jj] = model.col_upper[jj];
    if (lo_[jj] > up_[jj]) {
      throw Error(ErrorCode::kInvalidArgument, "column with empty bound range");
    }
  }
  for (int i = 0; i < m_; ++i) {
    const LpRow& row = model.rows[static_cast<std::size_t>(i)];
    if (row.lower > row.upper) {
      throw Error(ErrorCode::kInvalidArgument, "row with empty bound range");
    }
    lo_[static_cast<std::size_t>(n_ + i)] = row.lower;
    up_[static_cast<std::size_t>(n_ + i)] = row.upper;
  }
  const int max_it = options_.max_iterations > 0 ? options_.max_iterations
                                                 : 1000 + 50 * (m_ + total_);
  options_.max_iterations = max_it;
}

void Simplex::column(int j, std::vector<double>& out) const {
  out.assign(static_cast<std::size_t>(m_), 0.0);
  if (j < n_) {
    for (int i = 0; i < m_; ++i) out[static_cast<std::size_t>(i)] = a(i, j);
  } else if (j < n_ + m_) {
    out[static_cast<std::size_t>(j - n_)] = -1.0;
  } else {
    const int i = j - n_ - m_;
    out[static_cast<std::size_t>(i)] = art_sign_[static_cast<std::size_t>(i)];
  }
}

void Simplex::ftran(int j, std::vector<double>& alpha) const {
  alpha.assign(static_cast<std::size_t>(m_), 0.0);
  if (j < n_) {
    for (int i = 0; i < m_; ++i) {
      const double aij = a(i, j);
      if (aij == 0.0) continue;
      for (int r = 0; r < m_; ++r) alpha[static_cast<std::size_t>(r)] += binv_[idx(r, i)] * aij;
    }
  } else {
    const int i = j < n_ + m_ ? j - n_ : j - n_ - m_;
    const double s = j < n_ + m_ ? -1.0 : art_sign_[static_cast<std::size_t>(i)];
    for (int r = 0; r < m_; ++r) alpha[static_cast<std::size_t>(r)] = s * binv_[idx(r, i)];
  }
}

void Simplex::prices(std::vector<double>& y) const {
  y.assign(static_cast<std::size_t>(m_), 0.0);
  for (int r = 0; r < m_; ++r) {
    const double cb = cost_[static_cast<std::size_t>(head_[static_cast<std::size_t>(r)])];
    if (cb == 0.0) continue;
    for (int i = 0; i < m_; ++i) y[static_cast<std::size_t>(i)] += cb * binv_[idx(r, i)];
  }
}

double Simplex::reduced_cost(int j, const std::vector<double>& y) const {
  double d = cost_[static_cast<std::size_t>(j)];
  if (j < n_) {
    for (int i = 0; i < m_; ++i) d -= y[static_cast<std::size_t>(i)] * a(i, j);
  } else if (j < n_ + m_) {
    d += y[static_cast<std::size_t>(j - n_)];
  } else {
    const auto i = static_cast<std::size_t>(j - n_ - m_);
    d -= art_sign_[i] * y[i];
  }
  return d;
}

void Simplex::refactor() {
  std::vector<double> bmat(static_cast<std::size_t>(m_) * static_cast<std::size_t>(m_), 0.0);
  std::vector<double> col;
  for (int r = 0; r < m_; ++r) {
    column(head_[static_cast<std::size_t>(r)], col);
    for (int i = 0; i < m_; ++i) bmat[idx(i, r)] = col[static_cast<std::size_t>(i)];
  }
  if (!invert(bmat, m_)) {
    throw Error(ErrorCode::kNumerical, "simplex basis became singular");
  }
  binv_ = std::move(bmat);
  since_refactor_ = 0;
}

void Simplex::recompute_basic_values() {
  std::vector<double> rhs(static_cast<std::size_t>(m_), 0.0);
  std::vector<double> col;
  for (int j = 0; j < total_; ++j) {
    if (status_[static_cast<std::size_t>(j)] == BasisStatus::kBasic) continue;
    const double xj = x_[static_cast<std::size_t>(j)];
    if (xj == 0.0) continue;
    column(j, col);
    for (int i = 0; i < m_; ++i) rhs[static_cast<std::size_t>(i)] -= col[static_cast<std::size_t>(i)] * xj;
  }
  for (int r = 0; r < m_; ++r) {
    double v = 0.0;
    for (int i = 0; i < m_; ++i) v += binv_[idx(r, i)] * rhs[static_cast<std::size_t>(i)];
    x_[static_cast<std::size_t>(head_[static_cast<std::size_t>(r)])] = v;
  }
}

void Simplex::pivot(int r, int q, const std::vector<double>& alpha) {
  const double p = alpha[static_cast<std::size_t>(r)];
  for (int i = 0; i < m_; ++i) binv_[idx(r, i)] /= p;
  for (int rr = 0; rr < m_; ++rr) {
    if (rr == r) continue;
    const double f = alpha[static_cast<std::size_t>(rr)];
    if (f == 0.0) continue;
    for (int i = 0; i < m_; ++i) binv_[idx(rr, i)] -= f * binv_[idx(r, i)];
  }
  head_[static_cast<std::size_t>(r)] = q;
  status_[static_cast<std::size_t>(q)] = BasisStatus::kBasic;
  if (++since_refactor_ >= kRefactorEvery) {
    refactor();
    recompute_basic_values();
  }
}

LpStatus Simplex::iterate() {
  std::vector<double> y;
  std::vector<double> alpha;
  int degenerate_run = 0;
  bool bland = false;
  const int degenerate_limit = 10 * (m_ + n_);
  for (;;) {
    if (iterations_ >= options_.max_iterations) return LpStatus::kIterationLimit;
    prices(y);
    int q = -1;
    int dir = 0;
    double best = 0.0;
    for (int j = 0; j < total_; ++j) {
      const auto jj = static_cast<std::size_t>(j);
      const BasisStatus st = status_[jj];
      if (st == BasisStatus::kBasic || lo_[jj] == up_[jj]) continue;
      const double d = reduced_cost(j, y);
      int dj = 0;
      if (st == BasisStatus::kAtLower && d < -options_.optimality_tol) {
        dj = 1;
      } else if (st == BasisStatus::kAtUpper && d > options_.optimality_tol) {
        dj = -1;
      } else if (st == BasisStatus::kFree && std::abs(d) > options_.optimality_tol) {
        dj = d < 0.0 ? 1 : -1;
      }
      if (dj == 0) continue;
      if (bland) {
        q = j;
        dir = dj;
        break;
      }
      if (std::abs(d) > best) {
        best = std::abs(d);
        q = j;
        dir = dj;
      }
    }
    if (q < 0) return LpStatus::kOptimal;

    ftran(q, alpha);
    const auto qq = static_cast<std::size_t>(q);
    double theta = (std::isfinite(lo_[qq]) && std::isfinite(up_[qq])) ? up_[qq] - lo_[qq]
                                                                      : kLpInf;
    int leave = -1;
    bool leave_upper = false;
    double leave_pivot = 0.0;
    for (int r = 0; r < m_; ++r) {
      const double ar = alpha[static_cast<std::size_t>(r)];
      if (std::abs(ar) <= kPivotTol) continue;
      const double delta = -dir * ar;
      const int b = head_[static_cast<std::size_t>(r)];
      const auto bb = static_cast<std::size_t>(b);
      double t;
      bool to_upper;
      if (delta < 0.0) {
        if (!std::isfinite(lo_[bb])) continue;
        t = (x_[bb] - lo_[bb]) / (-delta);
        to_upper = false;
      } else {
        if (!std::isfinite(up_[bb])) continue;
        t = (up_[bb] - x_[bb]) / delta;
        to_upper = true;
      }
      t = std::max(t, 0.0);
      bool take = false;
      if (t < theta - kTieTol) {
        take = true;
      } else if (leave >= 0 && t <= theta + kTieTol) {
        if (bland) {
          take = b < head_[static_cast<std::size_t>(leave)];
        } else {
          take = std::abs(ar) > std::abs(leave_pivot);
        }
      }
      if (take) {
        leave = r;
        leave_upper = to_upper;
        leave_pivot = ar;
        theta = t;
      }
    }
    if (!std::isfinite(theta)) return LpStatus::kUnbounded;

    ++iterations_;
    x_[qq] += dir * theta;
    for (int r = 0; r < m_; ++r) {
      x_[static_cast<std::size_t>(head_[static_cast<std::size_t>(r)])] -=
          dir * alpha[static_cast<std::size_t>(r)] * theta;
    }
    if (leave < 0) {
      status_[qq] = dir > 0 ? BasisStatus::kAtUpper : BasisStatus::kAtLower;
      x_[qq] = dir > 0 ? up_[qq] : lo_[qq];
    } else {
      const int b = head_[static_cast<std::size_t>(leave)];
      const auto bb = static_cast<std::size_t>(b);
      status_[bb] = leave_upper ? BasisStatus::kAtUpper : BasisStatus::kAtLower;
      x_[bb] = leave_upper ? up_[bb] : lo_[bb];
      pivot(leave, q, alpha);
    }
    if (theta <= kTieTol) {
      if (++degenerate_run > degenerate_limit) bland = true;
    } else {
      degenerate_run = 0;
    }
  }
}

void Simplex::drive_out_artificials() {
  std::vector<double> col;
  std::vector<double> alpha;
  for (int r = 0; r < m_; ++r) {
    if (!is_artificial(head_[static_cast<std::size_t>(r)])) continue;
    int best_j = -1;
    double best = 1e-7;
    for (int j = 0; j < n_ + m_; ++j) {
      if (status_[static_cast<std::size_t>(j)] == BasisStatus::kBasic) continue;
      column(j, col);
      double v = 0.0;
      for (int i = 0; i < m_; ++i) v += binv_[idx(r, i)] * col[static_cast<std::size_t>(i)];
      if (std::abs(v) > best) {
        best = std::abs(v);
        best_j = j;
      }
    }
    if (best_j < 0) continue;  // redundant row; the artificial stays at zero
    const int art = head_[static_cast<std::size_t>(r)];
    ftran(best_j, alpha);
    status_[static_cast<std::size_t>(art)] = BasisStatus::kAtLower;
    x_[static_cast<std::size_t>(art)] = 0.0;
    pivot(r, best_j, alpha);
  }
  refactor();
  recompute_basic_values();
}

// The phase-one residual spread out of tolerance once the basis was
// refactored: the region is empty up to rounding.
LpBasisSolution Simplex::infeasible_after_phase_one(const LpBasisSolution& sol) const {
  LpBasisSolution out;
  out.status = LpStatus::kInfeasible;
  out.iterations = sol.iterations;
  return out;
}

LpBasisSolution Simplex::run() {
  // Starting point: structurals at a finite bound, logicals basic where the
  // row is satisfied, artificials basic elsewhere.
  for (int j = 0; j < n_; ++j) {
    const auto jj = static_cast<std::size_t>(j);
    if (std::isfinite(lo_[jj])) {
      x_[jj] = lo_[jj];
      status_[jj] = BasisStatus::kAtLower;
    } else if (std::isfinite(up_[jj])) {
      x_[jj] = up_[jj];
      status_[jj] = BasisStatus::kAtUpper;
    } else {
      x_[jj] = 0.0;
      status_[jj] = BasisStatus::kFree;
    }
  }
  head_.assign(static_cast<std::size_t>(m_), 0);
  binv_.assign(static_cast<std::size_t>(m_) * static_cast<std::size_t>(m_), 0.0);
  double scale = 1.0;
  for (int i = 0; i < m_; ++i) {
    double act = 0.0;
    for (int j = 0; j < n_; ++j) act += a(i, j) * x_[static_cast<std::size_t>(j)];
    const auto s = static_cast<std::size_t>(n_ + i);
    const auto art = static_cast<std::size_t>(n_ + m_ + i);
    lo_[art] = 0.0;
    up_[art] = 0.0;
    status_[art] = BasisStatus::kAtLower;
    if (std::isfinite(lo_[s])) scale = std::max(scale, std::abs(lo_[s]));
    if (std::isfinite(up_[s])) scale = std::max(scale, std::abs(up_[s]));
    if (act >= lo_[s] && act <= up_[s]) {
      x_[s] = act;
      status_[s] = BasisStatus::kBasic;
      head_[static_cast<std::size_t>(i)] = static_cast<int>(s);
      binv_[idx(i, i)] = -1.0;
    } else {
      const double bound = act < lo_[s] ? lo_[s] : up_[s];
      x_[s] = bound;
      status_[s] = act < lo_[s] ? BasisStatus::kAtLower : BasisStatus::kAtUpper;
      const double sign = bound - act > 0.0 ? 1.0 : -1.0;
      art_sign_[static_cast<std::size_t>(i)] = sign;
      x_[art] = std::abs(bound - act);
      up_[art] = kLpInf;
      cost_[art] = 1.0;
      status_[art] = BasisStatus::kBasic;
      head_[static_cast<std::size_t>(i)] = static_cast<int>(art);
      binv_[idx(i, i)] = sign;
    }
  }

  LpBasisSolution sol;
  bool need_phase_one = false;
  double phase_one_residual = 0.0;
  for (int i = 0; i < m_; ++i) {
    if (is_artificial(head_[static_cast<std::size_t>(i)])) need_phase_one = true;
  }
  if (need_phase_one) {
    const LpStatus p1 = iterate();
    if (p1 == LpStatus::kIterationLimit) {
      sol.status = p1;
      sol.iterations = iterations_;
      return sol;
    }
    refactor();
    recompute_basic_values();
    double infeas = 0.0;
    for (int i = 0; i < m_; ++i) {
      infeas += std::max(0.0, x_[static_cast<std::size_t>(n_ + m_ + i)]);
    }
    phase_one_residual = infeas;
    if (infeas > options_.feasibility_tol * scale) {
      sol.status = LpStatus::kInfeasible;
      sol.iterations = iterations_;
      return sol;
    }
    for (int i = 0; i < m_; ++i) {
      const auto art = static_cast<std::size_t>(n_ + m_ + i);
      cost_[art] = 0.0;
      up_[art] = 0.0;
      if (status_[art] != BasisStatus::kBasic) x_[art] = 0.0;
    }
    drive_out_artificials();
    // Leftover phase-one infeasibility shows up in the basic variables.
    for (int r = 0; r < m_; ++r) {
      const auto b = static_cast<std::size_t>(head_[static_cast<std::size_t>(r)]);
      const double slack = options_.feasibility_tol * (1.0 + std::abs(x_[b]));
      if (x_[b] < lo_[b] - slack || x_[b] > up_[b] + slack) {
        sol.status = LpStatus::kInfeasible;
        sol.iterations = iterations_;
        return sol;
      }
    }
  }
  for (int j = 0; j < n_; ++j) {
    cost_[static_cast<std::size_t>(j)] = model_.objective[static_cast<std::size_t>(j)];
  }
  const LpStatus p2 = iterate();
  sol.status = p2;
  sol.iterations = iterations_;
  if (p2 != LpStatus::kOptimal) return sol;
  refactor();
  recompute_basic_values();

  sol.zbar.assign(x_.begin(), x_.begin() + n_);
  sol.col_status.assign(status_.begin(), status_.begin() + n_);
  sol.row_status.assign(status_.begin() + n_, status_.begin() + n_ + m_);
  sol.row_activity.assign(static_cast<std::size_t>(m_), 0.0);
  const double tol = options_.residual_tol;
  for (int j = 0; j < n_; ++j) {
    const auto jj = static_cast<std::size_t>(j);
    const double slack = tol * (1.0 + std::abs(sol.zbar[jj]));
    if (sol.zbar[jj] < lo_[jj] - slack || sol.zbar[jj] > up_[jj] + slack) {
      if (phase_one_residual > 0.0) return infeasible_after_phase_one(sol);
      std::ostringstream os;
      os << "column " << j << " violates its bounds by more than " << tol;
      throw Error(ErrorCode::kNumerical, os.str());
    }
    sol.zbar[jj] = std::clamp(sol.zbar[jj], lo_[jj], up_[jj]);
  }
  for (int i = 0; i < m_; ++i) {
    double act = 0.0;
    for (int j = 0; j < n_; ++j) act += a(i, j) * sol.zbar[static_cast<std::size_t>(j)];
    sol.row_activity[static_cast<std::size_t>(i)] = act;
    const auto s = static_cast<std::size_t>(n_ + i);
    const double slack = tol * (1.0 + std::abs(act));
    if (std::abs(act - x_[s]) > slack || act < lo_[s] - slack || act > up_[s] + slack) {
      if (phase_one_residual > 0.0) return infeasible_after_phase_one(sol);
      std::ostringstream os;
      os << "row " << i << " residual exceeds " << tol;
      throw Error(ErrorCode::kNumerical, os.str());
    }
  }
  sol.objective_value = 0.0;
  for (int j = 0; j < n_; ++j) {
    sol.objective_value += model_.objective[static_cast<std::size_t>(j)] *
                           sol.zbar[static_cast<std::size_t>(j)];
  }
  for (int r = 0; r < m_; ++r) {
    const auto b = static_cast<std::size_t>(head_[static_cast<std::size_t>(r)]);
    const double eps = 1e-9 * (1.0 + std::abs(x_[b]));
    if ((std::isfinite(lo_[b]) && std::abs(x_[b] - lo_[b]) <= eps) ||
        (std::isfinite(up_[b]) && std::abs(x_[b] - up_[b]) <= eps)) {
      sol.degenerate = true;
    }
  }
  return sol;
}

// Greedy selection of linearly independent rows, in order.
std::vector<std::vector<double>> independent_rows(
    const std::vector<std::vector<double>>& candidates, std::size_t dim) {
  std::vector<std::vector<double>> chosen;
  std::vector<std::vector<double>> reduced;  // echelon copies of chosen rows
  std::vector<std::size_t> pivots;
  for (const auto& row : candidates) {
    if (chosen.size() == dim) break;
    std::vector<double> r = row;
    double norm = 0.0;
    for (double v : r) norm = std::max(norm, std::abs(v));
    if (norm == 0.0) continue;
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      const double f = r[pivots[k]] / reduced[k][pivots[k]];
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < dim; ++c) r[c] -= f * reduced[k][c];
    }
    std::size_t p = 0;
    for (std::size_t c = 1; c < dim; ++c) {
      if (std::abs(r[c]) > std::abs(r[p])) p = c;
    }
    if (std::abs(r[p]) <= 1e-9 * norm) continue;
    reduced.push_back(std::move(r));
    pivots.push_back(p);
    chosen.push_back(row);
  }
  return chosen;
}

}  // namespace

LpModel::LpModel(int num_cols)
    : objective(static_cast<std::size_t>(num_cols), 0.0),
      col_lower(static_cast<std::size_t>(num_cols), 0.0),
      col_upper(static_cast<std::size_t>(num_cols), kLpInf) {}

void LpModel::add_dense_row(std::span<const double> coeffs, double lower,
                            double upper) {
  LpRow row;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] != 0.0) {
      row.index.push_back(static_cast<int>(j));
      row.value.push_back(coeffs[j]);
    }
  }
  row.lower = lower;
  row.upper = upper;
  rows.push_back(std::move(row));
}

const char* lp_status_name(LpStatus s) {
  switch (s) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
    case LpStatus::kIterationLimit: return "iteration_limit";
  }
  return "unknown";
}

LpBasisSolution solve(const LpModel& model, const LpOptions& options) {
  Simplex simplex(model, options);
  return simplex.run();
}

double SimplicialCone::max_violation(std::span<const double> z) const {
  double worst = -kLpInf;
  for (const auto& row : rowmat) {
    double s = 0.0;
    for (std::size_t c = 0; c < row.size(); ++c) s += row[c] * (z[c] - vertex[c]);
    worst = std::max(worst, s);
  }
  return worst;
}

SimplicialCone make_cone(std::vector<double> vertex,
                         std::vector<std::vector<double>> rowmat) {
  const int p = static_cast<int>(vertex.size());
  if (static_cast<int>(rowmat.size()) != p) {
    throw Error(ErrorCode::kInvalidArgument, "cone row matrix is not square");
  }
  std::vector<double> inv(static_cast<std::size_t>(p) * static_cast<std::size_t>(p));
  for (int r = 0; r < p; ++r) {
    if (static_cast<int>(rowmat[static_cast<std::size_t>(r)].size()) != p) {
      throw Error(ErrorCode::kInvalidArgument, "cone row matrix is not square");
    }
    for (int c = 0; c < p; ++c) {
      inv[static_cast<std::size_t>(r) * static_cast<std::size_t>(p) + static_cast<std::size_t>(c)] =
          rowmat[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
  }
  if (!invert(inv, p, 1e-12)) {
    throw Error(ErrorCode::kDegenerate, "cone row matrix is singular");
  }
  SimplicialCone cone;
  cone.vertex = std::move(vertex);
  cone.rowmat = std::move(rowmat);
  cone.rays.assign(static_cast<std::size_t>(p), std::vector<double>(static_cast<std::size_t>(p)));
  for (int j = 0; j < p; ++j) {
    for (int r = 0; r < p; ++r) {
      cone.rays[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)] =
          -inv[static_cast<std::size_t>(r) * static_cast<std::size_t>(p) + static_cast<std::size_t>(j)];
    }
  }
  return cone;
}

SimplicialCone extract_cone(const LpModel& model, const LpBasisSolution& solution) {
  if (solution.status != LpStatus::kOptimal) {
    throw Error(ErrorCode::kInvalidArgument, "cone needs an optimal basis");
  }
  const auto n = static_cast<std::size_t>(model.num_cols());
  std::vector<std::vector<double>> rows;
  for (std::size_t j = 0; j < n; ++j) {
    const BasisStatus st = solution.col_status[j];
    if (st == BasisStatus::kBasic) continue;
    if (st == BasisStatus::kFree) {
      throw Error(ErrorCode::kInvalidArgument, "free nonbasic column has no cone row");
    }
    std::vector<double> r(n, 0.0);
    r[j] = st == BasisStatus::kAtUpper ? 1.0 : -1.0;
    rows.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < model.rows.size(); ++i) {
    const BasisStatus st = solution.row_status[i];
    if (st == BasisStatus::kBasic) continue;
    const double sign = st == BasisStatus::kAtUpper ? 1.0 : -1.0;
    std::vector<double> r(n, 0.0);
    const LpRow& row = model.rows[i];
    for (std::size_t t = 0; t < row.index.size(); ++t) {
      r[static_cast<std::size_t>(row.index[t])] += sign * row.value[t];
    }
    rows.push_back(std::move(r));
  }
  if (rows.size() != n) rows = independent_rows(rows, n);
  if (rows.size() != n) {
    throw Error(ErrorCode::kDegenerate, "basis does not determine a vertex");
  }
  SimplicialCone cone = make_cone(solution.zbar, std::move(rows));
  cone.degenerate = solution.degenerate;
  return cone;
}

SimplicialCone cone_from_active(const LpModel& model, std::span<const double> z,
                                double tol) {
  const auto n = static_cast<std::size_t>(model.num_cols());
  if (z.size() != n) {
    throw Error(ErrorCode::kInvalidArgument, "point dimension differs from the LP");
  }
  std::vector<std::vector<double>> candidates;
  for (const auto& row : model.rows) {
    std::vector<double> r(n, 0.0);
    double act = 0.0;
    for (std::size_t t = 0; t < row.index.size(); ++t) {
      r[static_cast<std::size_t>(row.index[t])] += row.value[t];
      act += row.value[t] * z[static_cast<std::size_t>(row.index[t])];
    }
    const double slack = tol * (1.0 + std::abs(act));
    if (std::isfinite(row.upper) && std::abs(act - row.upper) <= slack) {
      candidates.push_back(r);
    } else if (std::isfinite(row.lower) && std::abs(act - row.lower) <= slack) {
      for (double& v : r) v = -v;
      candidates.push_back(r);
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    const double slack = tol * (1.0 + std::abs(z[j]));
    std::vector<double> r(n, 0.0);
    if (std::isfinite(model.col_upper[j]) && std::abs(z[j] - model.col_upper[j]) <= slack) {
      r[j] = 1.0;
      candidates.push_back(r);
    } else if (std::isfinite(model.col_lower[j]) &&
               std::abs(z[j] - model.col_lower[j]) <= slack) {
      r[j] = -1.0;
      candidates.push_back(r);
    }
  }
  auto rows = independent_rows(candidates, n);
  if (rows.size() != n) {
    throw Error(ErrorCode::kDegenerate, "point is not a vertex of the LP region");
  }
  return make_cone(std::vector<double>(z.begin(), z.end()), std::move(rows));
}

}  // namespace signocut
