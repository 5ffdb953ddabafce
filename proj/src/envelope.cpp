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


#include "signocut/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "signocut/error.hpp"
#include "signocut/free_set.hpp"
#include "signocut/lp.hpp"

namespace signocut {

namespace {

struct Reduced {
  std::vector<std::size_t> active;  // coordinates with positive width
  std::vector<double> w;            // query point in unit coordinates
  std::vector<double> values;       // corner values over the active cube
};

Reduced reduce(const EnvelopeModel& model, std::span<const double> ubar) {
  const std::size_t h = model.h();
  if (ubar.size() != h) {
    throw Error(ErrorCode::kInvalidArgument, "query point length differs from beta");
  }
  Reduced r;
  for (std::size_t j = 0; j < h; ++j) {
    const double lo = model.box.lower[j];
    const double hi = model.box.upper[j];
    const double slack = 1e-9 * (1.0 + std::max(std::abs(lo), std::abs(hi)));
    if (ubar[j] < lo - slack || ubar[j] > hi + slack) {
      throw Error(ErrorCode::kInvalidArgument, "query point lies outside the box");
    }
    if (hi > lo) {
      r.active.push_back(j);
      r.w.push_back(std::clamp((ubar[j] - lo) / (hi - lo), 0.0, 1.0));
    }
  }
  const std::size_t count = std::size_t{1} << r.active.size();
  r.values.resize(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::size_t full = 0;
    for (std::size_t t = 0; t < r.active.size(); ++t) {
      if (mask & (std::size_t{1} << t)) full |= std::size_t{1} << r.active[t];
    }
    r.values[mask] = model.values[full];
  }
  return r;
}

// Maps a unit-space facet over the active coordinates back to u-space.
EnvelopeValue to_u_space(const EnvelopeModel& model, const Reduced& r,
                         std::span<const double> aw, double bw) {
  EnvelopeValue out;
  out.facet.a.assign(model.h(), 0.0);
  out.facet.b = bw;
  out.value = bw;
  for (std::size_t t = 0; t < r.active.size(); ++t) {
    const std::size_t j = r.active[t];
    const double lo = model.box.lower[j];
    const double side = model.box.upper[j] - lo;
    out.facet.a[j] = aw[t] / side;
    out.facet.b -= aw[t] * lo / side;
    out.value += aw[t] * r.w[t];
  }
  return out;
}

EnvelopeValue facet_lp(const EnvelopeModel& model, const Reduced& r) {
  const std::size_t h = r.active.size();
  const auto [mn, mx] = std::minmax_element(r.values.begin(), r.values.end());
  const double range = *mx - *mn;
  double maxabs = 0.0;
  for (double v : r.values) maxabs = std::max(maxabs, std::abs(v));
  const double slope_bound = 10.0 * range;
  const double offset_bound = 10.0 * std::max(maxabs, static_cast<double>(h) * range);

  LpModel lp(static_cast<int>(h + 1));
  for (std::size_t t = 0; t < h; ++t) {
    lp.objective[t] = -r.w[t];
    lp.col_lower[t] = -slope_bound;
    lp.col_upper[t] = slope_bound;
  }
  lp.objective[h] = -1.0;
  lp.col_lower[h] = -offset_bound;
  lp.col_upper[h] = offset_bound;
  for (std::size_t mask = 0; mask < r.values.size(); ++mask) {
    LpRow row;
    for (std::size_t t = 0; t < h; ++t) {
      if (mask & (std::size_t{1} << t)) {
        row.index.push_back(static_cast<int>(t));
        row.value.push_back(1.0);
      }
    }
    row.index.push_back(static_cast<int>(h));
    row.value.push_back(1.0);
    row.upper = r.values[mask];
    lp.add_row(std::move(row));
  }
  const LpBasisSolution sol = solve(lp);
  if (sol.status != LpStatus::kOptimal) {
    throw Error(ErrorCode::kNumerical, "facet LP did not reach optimality");
  }
  return to_u_space(model, r, std::span<const double>(sol.zbar.data(), h), sol.zbar[h]);
}

}  // namespace

UnitScaling::UnitScaling(Box b) : box(std::move(b)) {
  if (!box.is_finite()) throw Error(ErrorCode::kUnbounded, "scaling needs a finite box");
}

std::vector<double> UnitScaling::forward(std::span<const double> u) const {
  std::vector<double> w(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) {
    const double side = box.width(j);
    w[j] = side > 0.0 ? (u[j] - box.lower[j]) / side : 0.0;
  }
  return w;
}

std::vector<double> UnitScaling::backward(std::span<const double> w) const {
  std::vector<double> u(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) u[j] = box.lower[j] + box.width(j) * w[j];
  return u;
}

double Facet::operator()(std::span<const double> u) const {
  double s = b;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * u[j];
  return s;
}

EnvelopeModel::EnvelopeModel(std::vector<double> beta_in, Box box_in)
    : beta(std::move(beta_in)), box(std::move(box_in)) {
  const std::size_t h = beta.size();
  if (h > static_cast<std::size_t>(kEnvelopeMaxDim)) {
    throw Error(ErrorCode::kInvalidArgument, "envelope dimension above the hard cap");
  }
  if (box.dim() != h || box.upper.size() != h) {
    throw Error(ErrorCode::kInvalidArgument, "box dimension differs from beta");
  }
  double norm = 0.0;
  for (double b : beta) {
    if (!(b > 0.0)) throw Error(ErrorCode::kInvalidArgument, "beta must be positive");
    norm += b;
  }
  if (norm > 1.0 + 1e-12) {
    throw Error(ErrorCode::kInvalidArgument, "beta must have l1 norm at most 1");
  }
  if (!box.is_finite()) throw Error(ErrorCode::kUnbounded, "envelope box must be finite");
  for (std::size_t j = 0; j < h; ++j) {
    if (box.lower[j] < 0.0 || box.lower[j] > box.upper[j]) {
      throw Error(ErrorCode::kInvalidArgument, "envelope box must be nonnegative and ordered");
    }
  }
  std::vector<int> idx(h);
  std::iota(idx.begin(), idx.end(), 0);
  const std::size_t count = std::size_t{1} << h;
  vertices.reserve(count);
  values.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<double> q(h);
    for (std::size_t j = 0; j < h; ++j) {
      q[j] = (mask & (std::size_t{1} << j)) ? box.upper[j] : box.lower[j];
    }
    values.push_back(power_product(beta, idx, q));
    vertices.push_back(std::move(q));
  }
}

EnvelopeValue envelope_value(const EnvelopeModel& model, std::span<const double> ubar) {
  const Reduced r = reduce(model, ubar);
  if (r.active.empty()) return to_u_space(model, r, {}, r.values[0]);
  return facet_lp(model, r);
}

EnvelopeValue bivariate_envelope(double f00, double f10, double f01, double f11,
                                 std::span<const double> w) {
  if (w.size() != 2) throw Error(ErrorCode::kInvalidArgument, "bivariate point expected");
  if (f11 + f00 < f10 + f01 - kSupermodularTol) {
    throw Error(ErrorCode::kSupermodularity, "corner values are not supermodular");
  }
  const double s1 = f00 + (f10 - f00) * w[0] + (f01 - f00) * w[1];
  const double s2 = f11 + (f01 - f11) * (1.0 - w[0]) + (f10 - f11) * (1.0 - w[1]);
  EnvelopeValue out;
  if (s2 > s1) {
    out.value = s2;
    out.facet.a = {f11 - f01, f11 - f10};
    out.facet.b = f01 + f10 - f11;
  } else {
    out.value = s1;
    out.facet.a = {f10 - f00, f01 - f00};
    out.facet.b = f00;
  }
  return out;
}

EnvelopeValue envelope_closed_form(const EnvelopeModel& model, std::span<const double> ubar) {
  const Reduced r = reduce(model, ubar);
  switch (r.active.size()) {
    case 0:
      return to_u_space(model, r, {}, r.values[0]);
    case 1: {
      const double slope = r.values[1] - r.values[0];
      return to_u_space(model, r, std::span<const double>(&slope, 1), r.values[0]);
    }
    case 2: {
      const EnvelopeValue unit =
          bivariate_envelope(r.values[0], r.values[1], r.values[2], r.values[3], r.w);
      return to_u_space(model, r, unit.facet.a, unit.facet.b);
    }
    default:
      return facet_lp(model, r);
  }
}

bool check_supermodular(std::span<const double> values, int h, double tol) {
  if (h < 0 || h > 10) {
    throw Error(ErrorCode::kInvalidArgument, "supermodularity check supports h <= 10");
  }
  const unsigned count = 1u << static_cast<unsigned>(h);
  if (values.size() != count) {
    throw Error(ErrorCode::kInvalidArgument, "expected 2^h corner values");
  }
  double scale = 1.0;
  for (double v : values) scale = std::max(scale, std::abs(v));
  const double slack = tol * scale;
  const unsigned all = count - 1;
  for (unsigned w2 = 0; w2 < count; ++w2) {
    const unsigned free = all & ~w2;
    // w1 ranges over subsets of w2, d over nonempty subsets of the complement.
    for (unsigned w1 = w2;; w1 = (w1 - 1) & w2) {
      if (w1 != w2) {
        for (unsigned d = free; d != 0; d = (d - 1) & free) {
          const double lhs = values[w1 | d] - values[w1];
          const double rhs = values[w2 | d] - values[w2];
          if (lhs > rhs + slack) return false;
        }
      }
      if (w1 == 0) break;
    }
  }
  return true;
}

std::optional<Cut> oa_cut(const DccForm& form, std::span<const double> zbar,
                          const Box& zbox, double tol, int closed_form_max_dim) {
  const std::size_t h = form.h();
  Box ubox;
  std::vector<double> ubar(h);
  for (std::size_t j = 0; j < h; ++j) {
    const auto i = static_cast<std::size_t>(form.u_index[j]);
    if (i >= zbox.dim() || i >= zbar.size()) {
      throw Error(ErrorCode::kInvalidArgument, "form index outside the ambient space");
    }
    ubox.lower.push_back(zbox.lower[i]);
    ubox.upper.push_back(zbox.upper[i]);
    ubar[j] = std::clamp(zbar[i], zbox.lower[i], zbox.upper[i]);
  }
  if (!ubox.is_finite()) {
    throw Error(ErrorCode::kUnbounded, "outer approximation needs a finite u-box");
  }
  const EnvelopeModel model(form.beta, ubox);
  const EnvelopeValue env = static_cast<int>(h) <= closed_form_max_dim
                                ? envelope_closed_form(model, ubar)
                                : envelope_value(model, ubar);
  std::vector<double> vraw;
  for (int i : form.v_index) vraw.push_back(zbar[static_cast<std::size_t>(i)]);
  const std::vector<double> vbar = clamp_positive(vraw);
  std::vector<int> vidx(vbar.size());
  std::iota(vidx.begin(), vidx.end(), 0);
  const double psi_g = power_product(form.gamma, vidx, vbar);
  if (env.value - psi_g <= tol) return std::nullopt;

  const AffineFunction lin = linearize_power(form.gamma, vbar);
  std::vector<double> coeffs(zbox.dim(), 0.0);
  for (std::size_t j = 0; j < h; ++j) {
    coeffs[static_cast<std::size_t>(form.u_index[j])] += env.facet.a[j];
  }
  for (std::size_t j = 0; j < vbar.size(); ++j) {
    coeffs[static_cast<std::size_t>(form.v_index[j])] -= lin.coeffs[j];
  }
  Cut cut = Cut::from_dense(coeffs, lin.constant - env.facet.b, CutOrigin::kOuterApprox);
  cut.violation_at_source = cut.violation(zbar);
  return cut;
}

}  // namespace signocut
