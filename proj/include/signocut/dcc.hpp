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

// Difference-of-concave rewriting of a single signomial term set.
//
// The epigraph {t >= x^alpha} or hypograph {t <= x^alpha} of a term is
// rewritten over u and v, two disjoint groups of coordinates with strictly
// positive exponents, as
//
//   psi_beta(u) - psi_gamma(v) <= 0,   max(|beta|_1, |gamma|_1) = 1,
//
// so that both sides are concave power functions and at least one of them
// is positively homogeneous of degree one.

#ifndef SIGNOCUT_DCC_HPP_
#define SIGNOCUT_DCC_HPP_

#include <span>
#include <vector>

#include "signocut/model.hpp"

namespace signocut {

enum class Sense {
  kEpi,   // t >= x^alpha
  kHypo,  // t <= x^alpha
};

const char* sense_name(Sense sense);

// prod_j z[index_j]^exponent_j with 0^a = 0; 1 for an empty product.
double power_product(std::span<const double> exponent, std::span<const int> index,
                     std::span<const double> z);

struct DccForm {
  Sense sense = Sense::kHypo;
  std::vector<double> beta;
  std::vector<int> u_index;  // positions of u inside the ambient vector
  std::vector<double> gamma;
  std::vector<int> v_index;
  double eta = 1.0;          // accumulated power applied to both sides
  int t_index = -1;          // ambient position of the lifted variable

  std::size_t h() const { return beta.size(); }
  std::size_t ell() const { return gamma.size(); }
  double beta_norm() const;
  double gamma_norm() const;
  // Smallest ambient dimension that holds every index of the form.
  int min_ambient_dim() const;

  double psi_beta(std::span<const double> z) const;
  double psi_gamma(std::span<const double> z) const;
  // psi_beta(u) - psi_gamma(v); nonpositive exactly on the term set.
  double residual(std::span<const double> z) const;
};

enum class ConvexityClass { kConvex, kReverseConvex, kNonconvex };

const char* convexity_name(ConvexityClass c);

// Splits alpha into its negative and positive parts and returns the
// unscaled form (eta = 1):
//   hypo: beta' = (1, -alpha^-) on (t, x^-), gamma' = alpha^+ on x^+,
//   epi:  beta' = alpha^+ on x^+,            gamma' = (1, -alpha^-) on (t, x^-).
// Throws kInvalidArgument when alpha is empty.
DccForm reduce_and_split(const ExponentVector& alpha, Sense sense, int t_index);

// Raises both sides to eta = 1 / max(|beta|_1, |gamma|_1). Idempotent.
DccForm normalize(const DccForm& form);

// The normalized form of one term set.
DccForm make_dcc(const ExponentVector& alpha, Sense sense, int t_index);

// Pattern test on a normalized form. A half-space (both sides a single unit
// coordinate) is reported as convex.
ConvexityClass classify(const DccForm& form);

}  // namespace signocut

#endif  // SIGNOCUT_DCC_HPP_
