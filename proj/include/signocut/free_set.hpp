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

// Term-free sets obtained by reverse linearization.
//
// For a normalized form psi_beta(u) - psi_gamma(v) <= 0 and a point vbar > 0
// the set
//
//   C = { (u, v) : u >= 0, psi_beta(u) - lin(v) >= 0 },
//   lin(v) = psi_gamma(vbar) + grad psi_gamma(vbar) . (v - vbar),
//
// is convex, its interior misses the term set, and it is maximal with that
// property in the nonnegative orthant. Coordinates outside u and v are left
// free, which lifts C to any extended space.

#ifndef SIGNOCUT_FREE_SET_HPP_
#define SIGNOCUT_FREE_SET_HPP_

#include <span>
#include <utility>
#include <vector>

#include "signocut/dcc.hpp"

namespace signocut {

inline constexpr double kDefaultMembershipTol = 1e-9;
inline constexpr double kLinearizationFloor = 1e-6;

// constant + coeffs . v over a local v-vector.
struct AffineFunction {
  std::vector<double> coeffs;
  double constant = 0.0;

  double operator()(std::span<const double> v) const;
};

// Tangent of psi_gamma at vbar. Overestimates psi_gamma on the nonnegative
// orthant when |gamma|_1 <= 1. Throws kDomain unless vbar > 0.
AffineFunction linearize_power(std::span<const double> gamma,
                               std::span<const double> vbar);

// Raises every component to at least `floor`.
std::vector<double> clamp_positive(std::span<const double> v,
                                   double floor = kLinearizationFloor);

enum class Membership { kInterior, kBoundary, kExterior };

const char* membership_name(Membership m);

struct FreeSetCertificate {
  DccForm form;
  std::vector<double> vbar;
  AffineFunction lin;
  int lifted_dim = 0;

  // psi_beta(u) - lin(v) read from an ambient vector of size lifted_dim.
  double phi(std::span<const double> z) const;
  // Same, on local coordinates.
  double phi_local(std::span<const double> u, std::span<const double> v) const;

  std::vector<double> gather_u(std::span<const double> z) const;
  std::vector<double> gather_v(std::span<const double> z) const;
};

// vbar is clamped with clamp_positive first.
FreeSetCertificate build_free_set(const DccForm& form, std::span<const double> vbar);

// kInterior iff phi > tol, kBoundary iff |phi| <= tol.
Membership membership(const FreeSetCertificate& cert, std::span<const double> z,
                      double tol = kDefaultMembershipTol);

// A point where the tangent of psi_beta at ubreve, the boundary of C and
// the boundary of the complement of the term set all meet. With
// rho = psi_gamma(vbar) / psi_beta(ubreve) it is (rho * ubreve, vbar) when
// |beta|_1 = 1 and (ubreve, vbar / rho) otherwise. Throws kDegenerate when
// psi_beta(ubreve) = 0.
std::pair<std::vector<double>, std::vector<double>> maximality_witness(
    const FreeSetCertificate& cert, std::span<const double> ubreve);

// Re-embeds the certificate in a space of dimension ambient_dim. When given,
// index_map sends each current coordinate to its new position; otherwise
// positions are kept. Throws kInvalidArgument on indices out of range.
FreeSetCertificate orthogonal_lift(const FreeSetCertificate& cert, int ambient_dim,
                                   std::span<const int> index_map = {});

}  // namespace signocut

#endif  // SIGNOCUT_FREE_SET_HPP_
