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

#include "signocut/dcc.hpp"

#include <algorithm>
#include <cmath>

#include "signocut/error.hpp"

namespace signocut {

namespace {

constexpr double kNormTol = 1e-12;

double l1(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += std::abs(x);
  return s;
}

bool is_unit(const std::vector<double>& v) {
  return v.size() == 1 && std::abs(v[0] - 1.0) <= kNormTol;
}

}  // namespace

const char* sense_name(Sense sense) {
  return sense == Sense::kEpi ? "epi" : "hypo";
}

const char* convexity_name(ConvexityClass c) {
  switch (c) {
    case ConvexityClass::kConvex: return "convex";
    case ConvexityClass::kReverseConvex: return "reverse_convex";
    case ConvexityClass::kNonconvex: return "nonconvex";
  }
  return "unknown";
}

double power_product(std::span<const double> exponent, std::span<const int> index,
                     std::span<const double> z) {
  double log_sum = 0.0;
  for (std::size_t j = 0; j < exponent.size(); ++j) {
    const double zj = z[static_cast<std::size_t>(index[j])];
    if (zj < 0.0 || std::isnan(zj)) {
      throw Error(ErrorCode::kDomain, "power of a negative coordinate");
    }
    if (zj == 0.0) return 0.0;
    log_sum += exponent[j] * std::log(zj);
  }
  return std::exp(log_sum);
}

double DccForm::beta_norm() const { return l1(beta); }
double DccForm::gamma_norm() const { return l1(gamma); }

int DccForm::min_ambient_dim() const {
  int d = 0;
  for (int i : u_index) d = std::max(d, i + 1);
  for (int i : v_index) d = std::max(d, i + 1);
  return d;
}

double DccForm::psi_beta(std::span<const double> z) const {
  return power_product(beta, u_index, z);
}

double DccForm::psi_gamma(std::span<const double> z) const {
  return power_product(gamma, v_index, z);
}

double DccForm::residual(std::span<const double> z) const {
  return psi_beta(z) - psi_gamma(z);
}

DccForm reduce_and_split(const ExponentVector& alpha, Sense sense, int t_index) {
  if (alpha.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "exponent vector is zero");
  }
  if (t_index < 0) {
    throw Error(ErrorCode::kInvalidArgument, "lifted variable index is negative");
  }
  // Side holding t and x^-, with exponents (1, -alpha^-).
  std::vector<double> lifted_exp{1.0};
  std::vector<int> lifted_idx{t_index};
  // Side holding x^+, with exponents alpha^+.
  std::vector<double> plain_exp;
  std::vector<int> plain_idx;
  for (const auto& e : alpha.entries()) {
    if (e.var == t_index) {
      throw Error(ErrorCode::kInvalidArgument,
                  "lifted variable index collides with a term variable");
    }
    if (e.exponent < 0.0) {
      lifted_exp.push_back(-e.exponent);
      lifted_idx.push_back(e.var);
    } else {
      plain_exp.push_back(e.exponent);
      plain_idx.push_back(e.var);
    }
  }
  DccForm form;
  form.sense = sense;
  form.t_index = t_index;
  if (sense == Sense::kHypo) {
    form.beta = std::move(lifted_exp);
    form.u_index = std::move(lifted_idx);
    form.gamma = std::move(plain_exp);
    form.v_index = std::move(plain_idx);
  } else {
    form.beta = std::move(plain_exp);
    form.u_index = std::move(plain_idx);
    form.gamma = std::move(lifted_exp);
    form.v_index = std::move(lifted_idx);
  }
  return form;
}

DccForm normalize(const DccForm& form) {
  const double scale = std::max(form.beta_norm(), form.gamma_norm());
  if (!(scale > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "form has no exponents");
  }
  if (std::abs(scale - 1.0) <= kNormTol) return form;
  DccForm out = form;
  const double factor = 1.0 / scale;
  for (double& b : out.beta) b *= factor;
  for (double& g : out.gamma) g *= factor;
  out.eta = form.eta * factor;
  return out;
}

DccForm make_dcc(const ExponentVector& alpha, Sense sense, int t_index) {
  return normalize(reduce_and_split(alpha, sense, t_index));
}

ConvexityClass classify(const DccForm& form) {
  const double bn = form.beta_norm();
  const double gn = form.gamma_norm();
  // psi_beta linear univariate and psi_gamma concave: hypograph of a concave
  // function in disguise.
  if (is_unit(form.beta) && gn <= 1.0 + kNormTol) return ConvexityClass::kConvex;
  if (form.beta.empty() && std::abs(gn - 1.0) <= kNormTol) {
    return ConvexityClass::kConvex;
  }
  if (form.gamma.empty() && std::abs(bn - 1.0) <= kNormTol) {
    return ConvexityClass::kReverseConvex;
  }
  if (is_unit(form.gamma) && bn <= 1.0 + kNormTol) {
    return ConvexityClass::kReverseConvex;
  }
  return ConvexityClass::kNonconvex;
}

}  // namespace signocut
