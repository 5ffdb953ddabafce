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


// Spatial branch and bound over the extended formulation
//
//   min c.x  s.t.  A x + B y <= d,  y_i = x^alpha_i,  x in box,
//
// with an LP relaxation strengthened by intersection cuts and envelope
// outer-approximation cuts.

#ifndef SIGNOCUT_SBB_HPP_
#define SIGNOCUT_SBB_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "signocut/cut.hpp"
#include "signocut/dcc.hpp"
#include "signocut/intersection_cut.hpp"
#include "signocut/lp.hpp"
#include "signocut/model.hpp"

namespace signocut {

enum class CutMode { kDisable, kOc, kIc, kOic };

const char* cut_mode_name(CutMode mode);
std::optional<CutMode> parse_cut_mode(std::string_view text);

struct Settings {
  CutMode mode = CutMode::kOic;
  int max_cut_rounds = 5;              // separation rounds per node
  double cut_violation_min = 1e-5;     // on the max-coefficient-scaled violation
  double time_limit = 60.0;            // seconds
  double gap_tol = 1e-4;
  std::int64_t node_limit = 200000;
  std::uint64_t seed = 0;
  int max_envelope_dim = 4;            // largest h given an outer-approximation cut
  double feas_tol = 1e-6;
  int max_inherited_cuts = 100;
  double branch_min_width = 1e-6;
  bool record_cuts = false;

  // Throws kInvalidArgument on out-of-range fields.
  void validate() const;
};

struct Node {
  Box box;  // over z = (x, y)
  double lp_bound = -kLpInf;
  int depth = 0;
  std::int64_t id = 0;
  std::vector<Cut> cuts;  // local cuts, valid inside box
};

enum class SolveStatus { kOptimal, kInfeasible, kTimeLimit, kNodeLimit };

const char* solve_status_name(SolveStatus status);

struct CutCounts {
  std::int64_t intersection = 0;
  std::int64_t outer_approx = 0;
  std::int64_t linearization = 0;

  std::int64_t total() const { return intersection + outer_approx + linearization; }
  void add(CutOrigin origin, std::int64_t count = 1);
};

struct RecordedCut {
  Cut cut;
  Box box;  // node box where it was separated
};

struct SolveReport {
  SolveStatus status = SolveStatus::kInfeasible;
  double best_bound = -kLpInf;
  double incumbent_value = kLpInf;
  std::vector<double> incumbent;  // x, empty when none was found
  std::int64_t node_count = 0;
  double wall_time = 0.0;
  double rel_gap = kLpInf;
  CutCounts cuts_added;
  double root_initial_bound = -kLpInf;  // before any separation round
  double root_final_bound = -kLpInf;    // after the root cut loop
  std::int64_t root_cuts = 0;
  std::int64_t lp_solves = 0;
  std::int64_t lp_iterations = 0;
  CutMode mode = CutMode::kOic;
  std::uint64_t seed = 0;
  std::vector<RecordedCut> recorded_cuts;

  bool has_incumbent() const { return !incumbent.empty(); }
};

// (incumbent - bound) / max(1e-9, |incumbent|); +inf unless both are finite.
double relative_gap(double incumbent, double bound);

// Linear rows, z bounds, and tangent cuts of every convex term set at the
// box center plus two random box points.
LpModel build_root_relaxation(const ExtendedForm& ext, const Settings& settings);

struct CutLoopResult {
  LpBasisSolution solution;
  LpModel lp;                     // model of the final solve
  std::vector<Cut> new_cuts;
  CutCounts counts;
  double initial_bound = -kLpInf;
  int rounds = 0;
  bool infeasible = false;
};

// Solves the node LP and separates cuts for the violated terms until no cut
// reaches settings.cut_violation_min or the round limit is hit. Node cuts
// are included in every solve; new cuts are appended to node.cuts.
CutLoopResult cut_loop(const ExtendedForm& ext, const LpModel& base, Node& node,
                       const Settings& settings);

// Splits the x-variable that contributes most to the most violated term.
// Child y-bounds are recomputed from the child x-boxes. Throws
// kUnbranchable when every candidate side is narrower than min_width.
std::pair<Node, Node> branch(const ExtendedForm& ext, const Node& node,
                             std::span<const double> zbar, double tol,
                             double min_width = 1e-6);

// True when (x, g(x)) satisfies the rows and x lies in the program box.
bool is_feasible(const SignomialProgram& program, std::span<const double> x, double tol);

SolveReport solve(const SignomialProgram& program, const Settings& settings = {});

struct PointCut {
  int term = -1;
  Sense sense = Sense::kEpi;
  Cut cut;
};

struct SeparationResult {
  std::vector<TermViolation> violations;  // in term order
  std::vector<PointCut> cuts;
  bool cone_available = false;
  std::string cone_message;  // why no cone could be built, if so
};

// One separation round at a user-supplied z = (x, y) against the root
// relaxation. Intersection cuts use the cone of the constraints tight at z.
SeparationResult separate_point(const SignomialProgram& program, std::span<const double> z,
                                const Settings& settings);

}  // namespace signocut

#endif  // SIGNOCUT_SBB_HPP_
