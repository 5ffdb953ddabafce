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


// Linear inequality coeffs . z <= rhs over the extended space z = (x, y).

#ifndef SIGNOCUT_CUT_HPP_
#define SIGNOCUT_CUT_HPP_

#include <span>
#include <vector>

namespace signocut {

enum class CutOrigin { kIntersection, kOuterApprox, kLinearization };

const char* cut_origin_name(CutOrigin origin);

struct Cut {
  std::vector<int> index;     // strictly increasing
  std::vector<double> value;
  double rhs = 0.0;
  CutOrigin origin = CutOrigin::kIntersection;
  double violation_at_source = 0.0;

  // Builds the sparse cut from dense coefficients, dropping exact zeros.
  static Cut from_dense(std::span<const double> coeffs, double rhs, CutOrigin origin);

  double activity(std::span<const double> z) const;
  // activity(z) - rhs; positive when z is cut off.
  double violation(std::span<const double> z) const { return activity(z) - rhs; }
  double max_abs_coeff() const;
  // violation divided by the largest coefficient magnitude.
  double normalized_violation(std::span<const double> z) const;
  std::vector<double> to_dense(std::size_t dim) const;
};

}  // namespace signocut

#endif  // SIGNOCUT_CUT_HPP_
