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

// Dense bounded-variable revised simplex.
//
// Problems have the form
//
//   min c.z  s.t.  row_lower <= R z <= row_upper,  col_lower <= z <= col_upper.
//
// Each row i carries a logical variable s_i = R_i z bounded by the row
// bounds, so a basis has exactly num_rows() basic variables and every
// nonbasic variable sits at one of its bounds. The explicit basis inverse is
// kept dense; sizes are a few hundred at most.

#ifndef SIGNOCUT_LP_HPP_
#define SIGNOCUT_LP_HPP_

#include <limits>
#include <span>
#include <vector>

namespace signocut {

inline constexpr double kLpInf = std::numeric_limits<double>::infinity();

struct LpRow {
  std::vector<int> index;
  std::vector<double> value;
  double lower = -kLpInf;
  double upper = kLpInf;
};

struct LpModel {
  std::vector<double> objective;
  std::vector<double> col_lower;
  std::vector<double> col_upper;
  std::vector<LpRow> rows;

  LpModel() = default;
  explicit LpModel(int num_cols);

  int num_cols() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }
  // Appends lower <= coeffs . z <= upper from a dense coefficient vector.
  void add_dense_row(std::span<const double> coeffs, double lower, double upper);
  void add_row(LpRow row) { rows.push_back(std::move(row)); }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

const char* lp_status_name(LpStatus s);

enum class BasisStatus { kBasic, kAtLower, kAtUpper, kFree };

struct LpOptions {
  double feasibility_tol = 1e-7;
  double optimality_tol = 1e-7;
  double residual_tol = 1e-6;
  int max_iterations = 0;  // 0 picks a size-dependent default
};

struct LpBasisSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> zbar;
  std::vector<double> row_activity;
  std::vector<BasisStatus> col_status;
  std::vector<BasisStatus> row_status;
  double objective_value = 0.0;
  int iterations = 0;
  bool degenerate = false;  // some basic variable rests on a bound
};

// Throws kNumerical when the final residuals exceed options.residual_tol.
LpBasisSolution solve(const LpModel& model, const LpOptions& options = {});

// Translated simplicial cone { z : rowmat (z - vertex) <= 0 } with rays the
// columns of -rowmat^{-1}, stored one ray per entry of `rays`.
struct SimplicialCone {
  std::vector<double> vertex;
  std::vector<std::vector<double>> rowmat;
  std::vector<std::vector<double>> rays;
  bool degenerate = false;

  std::size_t dim() const { return vertex.size(); }
  // max_j rowmat_j . (z - vertex); nonpositive inside the cone.
  double max_violation(std::span<const double> z) const;
};

// Builds the cone from a square invertible row matrix. Throws kDegenerate
// when rowmat is singular.
SimplicialCone make_cone(std::vector<double> vertex,
                         std::vector<std::vector<double>> rowmat);

// Cone of the optimal basis: one row per nonbasic column or row, oriented
// so that the LP region satisfies it. Throws kInvalidArgument if the
// solution is not optimal or a nonbasic column is free.
SimplicialCone extract_cone(const LpModel& model, const LpBasisSolution& solution);

// Cone on num_cols() linearly independent constraints that are tight at z
// (within tol). Throws kDegenerate if fewer independent constraints are
// tight, i.e. z is not a vertex of the region.
SimplicialCone cone_from_active(const LpModel& model, std::span<const double> z,
                                double tol = 1e-9);

}  // namespace signocut

#endif  // SIGNOCUT_LP_HPP_
