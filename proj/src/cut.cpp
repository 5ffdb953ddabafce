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


#include "signocut/cut.hpp"

#include <algorithm>
#include <cmath>

#include "signocut/error.hpp"

namespace signocut {

const char* cut_origin_name(CutOrigin origin) {
  switch (origin) {
    case CutOrigin::kIntersection: return "intersection";
    case CutOrigin::kOuterApprox: return "outer_approx";
    case CutOrigin::kLinearization: return "linearization";
  }
  return "unknown";
}

Cut Cut::from_dense(std::span<const double> coeffs, double rhs, CutOrigin origin) {
  Cut cut;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (!std::isfinite(coeffs[j])) {
      throw Error(ErrorCode::kNumerical, "cut coefficient is not finite");
    }
    if (coeffs[j] != 0.0) {
      cut.index.push_back(static_cast<int>(j));
      cut.value.push_back(coeffs[j]);
    }
  }
  if (!std::isfinite(rhs)) throw Error(ErrorCode::kNumerical, "cut rhs is not finite");
  cut.rhs = rhs;
  cut.origin = origin;
  return cut;
}

double Cut::activity(std::span<const double> z) const {
  double s = 0.0;
  for (std::size_t t = 0; t < index.size(); ++t) {
    s += value[t] * z[static_cast<std::size_t>(index[t])];
  }
  return s;
}

double Cut::max_abs_coeff() const {
  double m = 0.0;
  for (double v : value) m = std::max(m, std::abs(v));
  return m;
}

double Cut::normalized_violation(std::span<const double> z) const {
  const double m = max_abs_coeff();
  const double viol = violation(z);
  return m > 0.0 ? viol / m : viol;
}

std::vector<double> Cut::to_dense(std::size_t dim) const {
  std::vector<double> out(dim, 0.0);
  for (std::size_t t = 0; t < index.size(); ++t) {
    out[static_cast<std::size_t>(index[t])] = value[t];
  }
  return out;
}

}  // namespace signocut
