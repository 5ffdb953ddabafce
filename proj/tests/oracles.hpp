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


// Reference computations used by the tests. They share no numerical code
// with the library: powers go through std::pow, linear algebra is redone
// from scratch, and exact arithmetic uses boost rationals.

#ifndef SIGNOCUT_TESTS_ORACLES_HPP_
#define SIGNOCUT_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "signocut/model.hpp"

namespace oracle {

using Vec = std::vector<double>;
using Mat = std::vector<Vec>;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

// prod x_j^e_j through std::pow, with 0^e = 0 for e > 0.
inline double pow_product(const Vec& e, const Vec& x) {
  double p = 1.0;
  for (std::size_t j = 0; j < e.size(); ++j) p *= std::pow(x[j], e[j]);
  return p;
}

// x^k by repeated multiplication, k >= 0 integer.
inline double repeated_mult(double x, int k) {
  double p = 1.0;
  for (int i = 0; i < k; ++i) p *= x;
  return p;
}

inline double central_difference(const std::function<double(const Vec&)>& f, Vec x,
                                 std::size_t j, double h = 1e-6) {
  const double xj = x[j];
  x[j] = xj + h;
  const double fp = f(x);
  x[j] = xj - h;
  const double fm = f(x);
  return (fp - fm) / (2.0 * h);
}

// Solves M y = r by Gaussian elimination with partial pivoting; nullopt when
// the matrix is numerically singular.
inline std::optional<Vec> solve_dense(Mat m, Vec r, double tol = 1e-12) {
  const std::size_t n = r.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t i = c + 1; i < n; ++i) {
      if (std::abs(m[i][c]) > std::abs(m[p][c])) p = i;
    }
    if (std::abs(m[p][c]) < tol) return std::nullopt;
    std::swap(m[p], m[c]);
    std::swap(r[p], r[c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      const double f = m[i][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[i][k] -= f * m[c][k];
      r[i] -= f * r[c];
    }
  }
  Vec y(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = r[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= m[i][k] * y[k];
    y[i] = s / m[i][i];
  }
  return y;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
  Mat c(a.size(), Vec(b[0].size(), 0.0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Exact LP optimum by vertex enumeration over rationals. Constraints are
// G z <= h with integer data; columns carry finite integer bounds.

using Rational = boost::multiprecision::cpp_rational;

struct IntLp {
  int n = 0;
  std::vector<std::vector<long>> g;  // rows of G
  std::vector<long> h;
  std::vector<long> c;  // minimize c.z
};

// Each z with n linearly independent tight constraints is tried; returns the
// best objective over feasible vertices, nullopt if there are none.
inline std::optional<Rational> vertex_enumeration_min(const IntLp& lp) {
  const std::size_t rows = lp.g.size();
  const auto n = static_cast<std::size_t>(lp.n);
  std::optional<Rational> best;
  std::vector<std::size_t> pick(n);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == n) {
      std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = lp.g[pick[i]][j];
        m[i][n] = lp.h[pick[i]];
      }
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return;
        std::swap(m[p], m[c]);
        for (std::size_t i = 0; i < n; ++i) {
          if (i == c || m[i][c] == 0) continue;
          const Rational f = m[i][c] / m[c][c];
          for (std::size_t k = c; k <= n; ++k) m[i][k] -= f * m[c][k];
        }
      }
      std::vector<Rational> z(n);
      for (std::size_t i = 0; i < n; ++i) z[i] = m[i][n] / m[i][i];
      for (std::size_t r = 0; r < rows; ++r) {
        Rational s = 0;
        for (std::size_t j = 0; j < n; ++j) s += lp.g[r][j] * z[j];
        if (s > lp.h[r]) return;
      }
      Rational obj = 0;
      for (std::size_t j = 0; j < n; ++j) obj += lp.c[j] * z[j];
      if (!best || obj < *best) best = obj;
      return;
    }
    for (std::size_t r = start; r + (n - depth) <= rows; ++r) {
      pick[depth] = r;
      rec(r + 1, depth + 1);
    }
  };
  rec(0, 0);
  return best;
}

// ---------------------------------------------------------------------------
// Convex envelope at w in [0,1]^h from corner values f (bit j of the corner
// index = coordinate j), as min sum lambda_q f(q) subject to
// sum lambda_q q = w, sum lambda_q = 1, lambda >= 0, by enumerating every
// affinely independent set of h + 1 corners.

inline double envelope_primal(const Vec& f, int h, const Vec& w) {
  const std::size_t count = std::size_t{1} << h;
  const auto hh = static_cast<std::size_t>(h);
  double best = kInf;
  std::vector<std::size_t> pick(hh + 1);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == hh + 1) {
      Mat m(hh + 1, Vec(hh + 1));
      Vec r(hh + 1);
      for (std::size_t t = 0; t <= hh; ++t) {
        for (std::size_t j = 0; j < hh; ++j) m[j][t] = (pick[t] >> j) & 1u ? 1.0 : 0.0;
        m[hh][t] = 1.0;
      }
      for (std::size_t j = 0; j < hh; ++j) r[j] = w[j];
      r[hh] = 1.0;
      const auto lambda = solve_dense(m, r, 1e-10);
      if (!lambda) return;
      double v = 0.0;
      for (std::size_t t = 0; t <= hh; ++t) {
        if ((*lambda)[t] < -1e-12) return;
        v += (*lambda)[t] * f[pick[t]];
      }
      best = std::min(best, v);
      return;
    }
    for (std::size_t q = start; q + (hh + 1 - depth) <= count; ++q) {
      pick[depth] = q;
      rec(q + 1, depth + 1);
    }
  };
  rec(0, 0);
  return best;
}

// ---------------------------------------------------------------------------
// Global minimum of c.x over {x in box : A x + B g(x) <= d} by interval
// subdivision. Monomials are monotone in each coordinate, so their range over
// a box is attained at corners of their support.

struct GlobalResult {
  double value = kInf;  // best feasible objective found
  double lower = -kInf; // proven lower bound
  Vec point;             // where value is attained
  std::int64_t boxes = 0;
  bool converged = false;
};

inline GlobalResult global_min(const signocut::SignomialProgram& p, double rel_tol = 1e-6,
                               double row_tol = 1e-9, std::int64_t max_boxes = 20000000) {
  const auto n = static_cast<std::size_t>(p.n);
  struct OBox {
    Vec lo, hi;
    double lb;
  };
  auto term_value = [&](int t, const Vec& x) {
    double v = 1.0;
    for (const auto& e : p.terms[static_cast<std::size_t>(t)].entries()) {
      v *= std::pow(x[static_cast<std::size_t>(e.var)], e.exponent);
    }
    return v;
  };
  auto term_range = [&](int t, const Vec& lo, const Vec& hi) {
    const auto& ent = p.terms[static_cast<std::size_t>(t)].entries();
    double mn = kInf, mx = -kInf;
    for (std::size_t mask = 0; mask < (std::size_t{1} << ent.size()); ++mask) {
      double v = 1.0;
      for (std::size_t s = 0; s < ent.size(); ++s) {
        const auto j = static_cast<std::size_t>(ent[s].var);
        v *= std::pow((mask >> s) & 1u ? hi[j] : lo[j], ent[s].exponent);
      }
      mn = std::min(mn, v);
      mx = std::max(mx, v);
    }
    return std::pair<double, double>(mn, mx);
  };
  std::vector<Vec> arow(static_cast<std::size_t>(p.m), Vec(n, 0.0));
  std::vector<Vec> brow(static_cast<std::size_t>(p.m), Vec(static_cast<std::size_t>(p.k), 0.0));
  for (const auto& t : p.A.entries) arow[static_cast<std::size_t>(t.row)][static_cast<std::size_t>(t.col)] += t.value;
  for (const auto& t : p.B.entries) brow[static_cast<std::size_t>(t.row)][static_cast<std::size_t>(t.col)] += t.value;

  auto feasible = [&](const Vec& x) {
    for (int i = 0; i < p.m; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += arow[static_cast<std::size_t>(i)][j] * x[j];
      for (int t = 0; t < p.k; ++t) s += brow[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] * term_value(t, x);
      if (s > p.d[static_cast<std::size_t>(i)] + row_tol) return false;
    }
    return true;
  };
  auto objective = [&](const Vec& x) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += p.c[j] * x[j];
    return s;
  };

  GlobalResult res;
  auto cmp = [](const OBox& a, const OBox& b) { return a.lb > b.lb; };
  std::priority_queue<OBox, std::vector<OBox>, decltype(cmp)> open(cmp);
  const Vec width0 = [&] {
    Vec w(n);
    for (std::size_t j = 0; j < n; ++j) w[j] = std::max(p.bounds.upper[j] - p.bounds.lower[j], 1e-300);
    return w;
  }();

  // Evaluates a box: proves it infeasible, solves it, or queues it.
  auto process = [&](Vec lo, Vec hi) {
    ++res.boxes;
    std::vector<std::pair<double, double>> ranges;
    for (int t = 0; t < p.k; ++t) ranges.push_back(term_range(t, lo, hi));
    for (int i = 0; i < p.m; ++i) {
      double mn = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double a = arow[static_cast<std::size_t>(i)][j];
        mn += std::min(a * lo[j], a * hi[j]);
      }
      for (int t = 0; t < p.k; ++t) {
        const double b = brow[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
        mn += std::min(b * ranges[static_cast<std::size_t>(t)].first, b * ranges[static_cast<std::size_t>(t)].second);
      }
      if (mn > p.d[static_cast<std::size_t>(i)] + row_tol) return;
    }
    Vec best(n);
    for (std::size_t j = 0; j < n; ++j) best[j] = p.c[j] >= 0.0 ? lo[j] : hi[j];
    const double lb = objective(best);
    if (feasible(best)) {
      if (lb < res.value) {
        res.value = lb;
        res.point = best;
      }
      return;
    }
    Vec mid(n);
    for (std::size_t j = 0; j < n; ++j) mid[j] = 0.5 * (lo[j] + hi[j]);
    if (feasible(mid) && objective(mid) < res.value) {
      res.value = objective(mid);
      res.point = mid;
    }
    if (lb >= res.value) return;
    open.push({std::move(lo), std::move(hi), lb});
  };

  process(p.bounds.lower, p.bounds.upper);
  while (!open.empty()) {
    OBox b = open.top();
    const double target = res.value - rel_tol * std::max(1.0, std::abs(res.value));
    if (b.lb >= target) {
      res.lower = std::min(b.lb, res.value);
      res.converged = true;
      return res;
    }
    open.pop();
    if (res.boxes >= max_boxes) {
      res.lower = b.lb;
      return res;
    }
    std::size_t split = 0;
    double widest = -1.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double rw = (b.hi[j] - b.lo[j]) / width0[j];
      if (rw > widest) {
        widest = rw;
        split = j;
      }
    }
    const double m = 0.5 * (b.lo[split] + b.hi[split]);
    Vec hi1 = b.hi;
    hi1[split] = m;
    Vec lo2 = b.lo;
    lo2[split] = m;
    process(b.lo, std::move(hi1));
    process(std::move(lo2), b.hi);
  }
  res.lower = res.value;
  res.converged = true;
  return res;
}

// ---------------------------------------------------------------------------
// Sampling helpers.

inline Vec uniform_box(std::mt19937_64& rng, const Vec& lo, const Vec& hi) {
  Vec x(lo.size());
  for (std::size_t j = 0; j < lo.size(); ++j) {
    x[j] = std::uniform_real_distribution<double>(lo[j], hi[j])(rng);
  }
  return x;
}

inline double uniform(std::mt19937_64& rng, double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(rng);
}

}  // namespace oracle

#endif  // SIGNOCUT_TESTS_ORACLES_HPP_
