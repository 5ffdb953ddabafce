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


// Intersection cuts from term-free sets.
//
// Given a translated simplicial cone {z : R (z - zbar) <= 0} containing the
// LP region and a convex set C with zbar in its interior, the step length
// eta_j is the largest eta with zbar + eta r_j in C, and
//
//   sum_j R_j (z - zbar) / eta_j <= -1
//
// is valid for every point of the cone outside int(C). Infinite steps give a
// zero coefficient.

#ifndef SIGNOCUT_INTERSECTION_CUT_HPP_
#define SIGNOCUT_INTERSECTION_CUT_HPP_

#include <optional>
#include <span>
#include <vector>

#include "signocut/cut.hpp"
#include "signocut/dcc.hpp"
#include "signocut/free_set.hpp"
#include "signocut/lp.hpp"
#include "signocut/model.hpp"

namespace signocut {

struct TermViolation {
  int term = -1;
  Sense sense = Sense::kEpi;  // the term set that zbar violates
  double residual = 0.0;      // |ybar_i - g_i(xbar)|
};

// Violations above tol, most violated first; ties keep term order.
std::vector<TermViolation> violated_terms(const ExtendedForm& ext,
                                          std::span<const double> zbar, double tol);

// The most violated term, or nullopt when every residual is <= tol.
std::optional<TermViolation> select_violated_term(const ExtendedForm& ext,
                                                  std::span<const double> zbar,
                                                  double tol);

// Certificate for the violated term set, lifted to the full z-space with
// vbar read from zbar.
FreeSetCertificate term_certificate(const ExtendedForm& ext, const TermViolation& tv,
                                    std::span<const double> zbar);

inline constexpr double kStepTol = 1e-9;
inline constexpr int kStepMaxBisections = 200;

// Largest eta (up to kStepTol) with zbar + eta ray in C, capped where the
// u-part of the ray leaves the nonnegative orthant. Returns +inf when the
// ray never leaves C. Throws kInternal unless zbar is interior to C.
double step_length(const FreeSetCertificate& cert, std::span<const double> zbar,
                   std::span<const double> ray);

std::vector<double> step_lengths(const FreeSetCertificate& cert,
                                 const SimplicialCone& cone);

// Throws kTrivialCut when every step length is infinite.
Cut build_cut(const SimplicialCone& cone, const FreeSetCertificate& cert);

// Same cut from precomputed step lengths.
Cut cut_from_steps(const SimplicialCone& cone, std::span<const double> eta);

}  // namespace signocut

#endif  // SIGNOCUT_INTERSECTION_CUT_HPP_
