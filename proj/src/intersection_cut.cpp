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


#include "signocut/intersection_cut.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "signocut/error.hpp"

namespace signocut {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kProbeCap = 1152921504606846976.0;  // 2^60

}  // namespace

std::vector<TermViolation> violated_terms(const ExtendedForm& ext,
                                          std::span<const double> zbar, double tol) {
  const SignomialProgram& p = ext.base;
  if (static_cast<int>(zbar.size()) != ext.dim()) {
    throw Error(ErrorCode::kInvalidArgument, "point dimension differs from n + k");
  }
  std::vector<double> x(zbar.begin(), zbar.begin() + p.n);
  for (double& v : x) v = std::max(v, 0.0);
  std::vector<TermViolation> out;
  for (int i = 0; i < p.k; ++i) {
    double g;
    try {
      g = eval_term(p.terms[static_cast<std::size_t>(i)], x);
    } catch (const Error&) {
      continue;
    }
    const double y = zbar[static_cast<std::size_t>(ext.y_index(i))];
    const double r = std::abs(y - g);
    if (!(r > tol) || !std::isfinite(r)) continue;
    out.push_back({i, g > y ? Sense::kEpi : Sense::kHypo, r});
  }
  std::stable_sort(out.begin(), out.end(), [](const TermViolation& a, const TermViolation& b) {
    return a.residual > b.residual;
  });
  return out;
}

std::optional<TermViolation> select_violated_term(const ExtendedForm& ext,
                                                  std::span<const double> zbar,
                                                  double tol) {
  auto all = violated_terms(ext, zbar, tol);
  if (all.empty()) return std::nullopt;
  return all.front();
}

FreeSetCertificate term_certificate(const ExtendedForm& ext, const TermViolation& tv,
                                    std::span<const double> zbar) {
  const DccForm form = make_dcc(ext.base.terms[static_cast<std::size_t>(tv.term)], tv.sense,
                                ext.y_index(tv.term));
  std::vector<double> vbar;
  for (int i : form.v_index) vbar.push_back(zbar[static_cast<std::size_t>(i)]);
  return orthogonal_lift(build_free_set(form, vbar), ext.dim());
}

double step_length(const FreeSetCertificate& cert, std::span<const double> zbar,
                   std::span<const double> ray) {
  if (zbar.size() != ray.size() || static_cast<int>(zbar.size()) != cert.lifted_dim) {
    throw Error(ErrorCode::kInvalidArgument, "ray, point and certificate dimensions differ");
  }
  const auto& ui = cert.form.u_index;
  const auto& vi = cert.form.v_index;
  double eta_cap = kInf;
  for (int i : ui) {
    const double r = ray[static_cast<std::size_t>(i)];
    if (r < 0.0) {
      eta_cap = std::min(eta_cap, std::max(0.0, zbar[static_cast<std::size_t>(i)]) / -r);
    }
  }
  std::vector<double> u(ui.size());
  std::vector<double> v(vi.size());
  auto tau = [&](double eta) {
    for (std::size_t j = 0; j < ui.size(); ++j) {
      const auto i = static_cast<std::size_t>(ui[j]);
      u[j] = std::max(0.0, zbar[i] + eta * ray[i]);
    }
    for (std::size_t j = 0; j < vi.size(); ++j) {
      const auto i = static_cast<std::size_t>(vi[j]);
      v[j] = zbar[i] + eta * ray[i];
    }
    return cert.phi_local(u, v);
  };
  if (!(tau(0.0) > 0.0)) {
    throw Error(ErrorCode::kInternal, "step length needs a point interior to the set");
  }
  double lo = 0.0;
  double hi = kInf;
  for (double eta = 1.0;; eta *= 2.0) {
    if (eta >= eta_cap) {
      if (tau(eta_cap) >= 0.0) return eta_cap;
      hi = eta_cap;
      break;
    }
    if (tau(eta) < 0.0) {
      hi = eta;
      break;
    }
    lo = eta;
    if (eta >= kProbeCap) return kInf;
  }
  for (int it = 0; it < kStepMaxBisections && hi - lo > kStepTol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (tau(mid) >= 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::vector<double> step_lengths(const FreeSetCertificate& cert,
                                 const SimplicialCone& cone) {
  std::vector<double> eta;
  eta.reserve(cone.rays.size());
  for (const auto& ray : cone.rays) eta.push_back(step_length(cert, cone.vertex, ray));
  return eta;
}

Cut cut_from_steps(const SimplicialCone& cone, std::span<const double> eta) {
  const std::size_t p = cone.dim();
  if (eta.size() != cone.rowmat.size()) {
    throw Error(ErrorCode::kInvalidArgument, "one step length per cone row expected");
  }
  std::vector<double> coeffs(p, 0.0);
  bool any = false;
  for (std::size_t j = 0; j < eta.size(); ++j) {
    if (std::isinf(eta[j])) continue;
    if (!(eta[j] > 0.0)) {
      throw Error(ErrorCode::kInternal, "zero step length");
    }
    any = true;
    const double w = 1.0 / eta[j];
    for (std::size_t c = 0; c < p; ++c) coeffs[c] += w * cone.rowmat[j][c];
  }
  if (!any) {
    throw Error(ErrorCode::kTrivialCut, "every step length is infinite");
  }
  double rhs = -1.0;
  for (std::size_t c = 0; c < p; ++c) rhs += coeffs[c] * cone.vertex[c];
  Cut cut = Cut::from_dense(coeffs, rhs, CutOrigin::kIntersection);
  cut.violation_at_source = cut.violation(cone.vertex);
  return cut;
}

Cut build_cut(const SimplicialCone& cone, const FreeSetCertificate& cert) {
  const auto eta = step_lengths(cert, cone);
  return cut_from_steps(cone, eta);
}

}  // namespace signocut
