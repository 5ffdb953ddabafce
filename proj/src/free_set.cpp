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

#include "signocut/free_set.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "signocut/error.hpp"

namespace signocut {

namespace {

std::vector<int> iota_index(std::size_t n) {
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  return idx;
}

}  // namespace

double AffineFunction::operator()(std::span<const double> v) const {
  double s = constant;
  for (std::size_t j = 0; j < coeffs.size(); ++j) s += coeffs[j] * v[j];
  return s;
}

AffineFunction linearize_power(std::span<const double> gamma,
                               std::span<const double> vbar) {
  if (gamma.size() != vbar.size()) {
    throw Error(ErrorCode::kInvalidArgument, "gamma and vbar differ in length");
  }
  for (double x : vbar) {
    if (!(x > 0.0)) {
      throw Error(ErrorCode::kDomain, "linearization point must be positive");
    }
  }
  const auto idx = iota_index(gamma.size());
  const double value = power_product(gamma, idx, vbar);
  AffineFunction f;
  f.coeffs.resize(gamma.size());
  f.constant = value;
  for (std::size_t j = 0; j < gamma.size(); ++j) {
    f.coeffs[j] = gamma[j] * value / vbar[j];
    f.constant -= f.coeffs[j] * vbar[j];
  }
  return f;
}

std::vector<double> clamp_positive(std::span<const double> v, double floor) {
  std::vector<double> out(v.begin(), v.end());
  for (double& x : out) {
    if (!(x >= floor)) x = floor;
  }
  return out;
}

const char* membership_name(Membership m) {
  switch (m) {
    case Membership::kInterior: return "interior";
    case Membership::kBoundary: return "boundary";
    case Membership::kExterior: return "exterior";
  }
  return "unknown";
}

std::vector<double> FreeSetCertificate::gather_u(std::span<const double> z) const {
  std::vector<double> u;
  u.reserve(form.u_index.size());
  for (int i : form.u_index) u.push_back(z[static_cast<std::size_t>(i)]);
  return u;
}

std::vector<double> FreeSetCertificate::gather_v(std::span<const double> z) const {
  std::vector<double> v;
  v.reserve(form.v_index.size());
  for (int i : form.v_index) v.push_back(z[static_cast<std::size_t>(i)]);
  return v;
}

double FreeSetCertificate::phi_local(std::span<const double> u,
                                     std::span<const double> v) const {
  const auto idx = iota_index(u.size());
  return power_product(form.beta, idx, u) - lin(v);
}

double FreeSetCertificate::phi(std::span<const double> z) const {
  if (static_cast<int>(z.size()) != lifted_dim) {
    throw Error(ErrorCode::kInvalidArgument,
                "point dimension differs from the certificate's space");
  }
  const auto u = gather_u(z);
  const auto v = gather_v(z);
  return phi_local(u, v);
}

FreeSetCertificate build_free_set(const DccForm& form, std::span<const double> vbar) {
  if (vbar.size() != form.ell()) {
    throw Error(ErrorCode::kInvalidArgument, "vbar length differs from gamma");
  }
  FreeSetCertificate cert;
  cert.form = form;
  cert.vbar = clamp_positive(vbar);
  cert.lin = linearize_power(form.gamma, cert.vbar);
  cert.lifted_dim = form.min_ambient_dim();
  return cert;
}

Membership membership(const FreeSetCertificate& cert, std::span<const double> z,
                      double tol) {
  const double phi = cert.phi(z);
  if (phi > tol) return Membership::kInterior;
  if (phi >= -tol) return Membership::kBoundary;
  return Membership::kExterior;
}

std::pair<std::vector<double>, std::vector<double>> maximality_witness(
    const FreeSetCertificate& cert, std::span<const double> ubreve) {
  const DccForm& form = cert.form;
  if (ubreve.size() != form.h()) {
    throw Error(ErrorCode::kInvalidArgument, "ubreve length differs from beta");
  }
  const auto uidx = iota_index(form.h());
  const auto vidx = iota_index(form.ell());
  const double f1 = power_product(form.beta, uidx, ubreve);
  if (!(f1 > 0.0)) {
    throw Error(ErrorCode::kDegenerate, "psi_beta vanishes at ubreve");
  }
  const double f2 = power_product(form.gamma, vidx, cert.vbar);
  const double rho = f2 / f1;
  std::vector<double> u(ubreve.begin(), ubreve.end());
  std::vector<double> v = cert.vbar;
  if (std::abs(form.beta_norm() - 1.0) <= 1e-12) {
    for (double& x : u) x *= rho;
  } else if (std::abs(form.gamma_norm() - 1.0) <= 1e-12) {
    for (double& x : v) x /= rho;
  } else {
    throw Error(ErrorCode::kInvalidArgument, "form is not normalized");
  }
  return {std::move(u), std::move(v)};
}

FreeSetCertificate orthogonal_lift(const FreeSetCertificate& cert, int ambient_dim,
                                   std::span<const int> index_map) {
  FreeSetCertificate out = cert;
  auto remap = [&](int i) {
    int j = i;
    if (!index_map.empty()) {
      if (i < 0 || i >= static_cast<int>(index_map.size())) {
        throw Error(ErrorCode::kInvalidArgument, "index map too short");
      }
      j = index_map[static_cast<std::size_t>(i)];
    }
    if (j < 0 || j >= ambient_dim) {
      throw Error(ErrorCode::kInvalidArgument, "lifted index out of range");
    }
    return j;
  };
  for (int& i : out.form.u_index) i = remap(i);
  for (int& i : out.form.v_index) i = remap(i);
  if (out.form.t_index >= 0) out.form.t_index = remap(out.form.t_index);
  out.lifted_dim = ambient_dim;
  return out;
}

}  // namespace signocut
