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


// Convex envelopes of concave power functions over boxes, and the
// outer-approximation cuts built from them.
//
// A concave function over a box has a polyhedral envelope determined by its
// values at the 2^h corners. Each facet is an affine underestimator of the
// corner values, found by the facet LP
//
//   max a.w + b  s.t.  a.q + b <= f(q)  for all q in {0,1}^h
//
// in unit coordinates w. For h = 2 and supermodular corner values the
// envelope is the larger of the two affine interpolants on the triangles
// {00, 10, 01} and {11, 10, 01}.

#ifndef SIGNOCUT_ENVELOPE_HPP_
#define SIGNOCUT_ENVELOPE_HPP_

#include <optional>
#include <span>
#include <vector>

#include "signocut/cut.hpp"
#include "signocut/dcc.hpp"
#include "signocut/model.hpp"

namespace signocut {

inline constexpr int kEnvelopeMaxDim = 20;
inline constexpr double kSupermodularTol = 1e-12;

// u = lower + (upper - lower) w, side by side.
struct UnitScaling {
  Box box;

  explicit UnitScaling(Box b);
  std::vector<double> forward(std::span<const double> u) const;   // u -> w
  std::vector<double> backward(std::span<const double> w) const;  // w -> u
};

struct Facet {
  std::vector<double> a;
  double b = 0.0;

  double operator()(std::span<const double> u) const;
};

struct EnvelopeModel {
  std::vector<double> beta;
  Box box;
  // Corner q has coordinate j at the upper bound iff bit j of its position is set.
  std::vector<std::vector<double>> vertices;
  std::vector<double> values;

  // Throws kInvalidArgument when |beta|_1 > 1, h exceeds kEnvelopeMaxDim
  // or the box does not match beta; kUnbounded when a side is infinite.
  EnvelopeModel(std::vector<double> beta, Box box);

  std::size_t h() const { return beta.size(); }
};

struct EnvelopeValue {
  double value = 0.0;
  Facet facet;  // in u-space; attains value at the query point
};

// Envelope at ubar through the facet LP. Zero-width sides are removed first
// and get a zero slope.
EnvelopeValue envelope_value(const EnvelopeModel& model, std::span<const double> ubar);

// Closed form for h <= 2 (chord, or the two-triangle formula); falls back to
// the facet LP for larger h.
EnvelopeValue envelope_closed_form(const EnvelopeModel& model, std::span<const double> ubar);

// Two-triangle envelope on [0,1]^2 with the facet in w-space. Throws
// kSupermodularity when f11 + f00 < f10 + f01 - kSupermodularTol.
EnvelopeValue bivariate_envelope(double f00, double f10, double f01, double f11,
                                 std::span<const double> w);

// Increasing differences f(w1 + d) - f(w1) <= f(w2 + d) - f(w2) for all
// w1 <= w2 and d disjoint from w2, with corner values indexed as in
// EnvelopeModel. Requires h <= 10.
bool check_supermodular(std::span<const double> values, int h,
                        double tol = kSupermodularTol);

inline constexpr double kOaTol = 1e-9;

// Builds a.u + b - lin_vbar(v) <= 0 from the envelope facet at ubar, with
// the box read from zbox over the ambient space. Returns nullopt when
// env(ubar) - psi_gamma(vbar) <= tol. Throws kUnbounded for infinite u-sides.
std::optional<Cut> oa_cut(const DccForm& form, std::span<const double> zbar,
                          const Box& zbox, double tol = kOaTol,
                          int closed_form_max_dim = 2);

}  // namespace signocut

#endif  // SIGNOCUT_ENVELOPE_HPP_
