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

// Signomial programs in natural form
//
//   min c.x  s.t.  A x + B g(x) <= d,  lower <= x <= upper,
//
// where every g_i is a monomial x^alpha with real exponents, and their
// extended form over z = (x, y) with y_i standing in for g_i(x).

#ifndef SIGNOCUT_MODEL_HPP_
#define SIGNOCUT_MODEL_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace signocut {

struct VarPower {
  int var = 0;
  double exponent = 0.0;

  bool operator==(const VarPower&) const = default;
};

// Sparse exponent map. Entries are sorted by variable and never zero.
class ExponentVector {
 public:
  ExponentVector() = default;
  // Throws kInvalidArgument on negative or repeated variable indices.
  explicit ExponentVector(std::vector<VarPower> entries);

  static ExponentVector from_dense(std::span<const double> alpha);

  std::span<const VarPower> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Exponent of `var`, zero when absent.
  double exponent(int var) const;
  // Largest referenced variable index, -1 when empty.
  int max_var() const;
  double l1_norm() const;
  ExponentVector negated() const;

  bool operator==(const ExponentVector&) const = default;

 private:
  std::vector<VarPower> entries_;
};

struct Box {
  std::vector<double> lower;
  std::vector<double> upper;

  Box() = default;
  Box(std::vector<double> lo, std::vector<double> hi);

  std::size_t dim() const { return lower.size(); }
  double width(std::size_t j) const { return upper[j] - lower[j]; }
  bool contains(std::span<const double> x, double tol = 0.0) const;
  bool is_finite() const;

  bool operator==(const Box&) const = default;
};

struct Triplet {
  int row = 0;
  int col = 0;
  double value = 0.0;

  bool operator==(const Triplet&) const = default;
};

// Coordinate-format sparse matrix, kept sorted row-major.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Triplet> entries;

  void add(int row, int col, double value);
  void normalize();  // sort, merge duplicates, drop zeros
  std::vector<double> row_dense(int row) const;

  bool operator==(const SparseMatrix&) const = default;
};

struct SignomialProgram {
  int n = 0;  // variables
  int k = 0;  // signomial terms
  int m = 0;  // linear rows
  std::vector<double> c;
  SparseMatrix A;  // m x n
  SparseMatrix B;  // m x k
  std::vector<double> d;
  std::vector<ExponentVector> terms;
  Box bounds;

  // Throws kInvalidArgument naming the first violated invariant.
  void validate() const;

  bool operator==(const SignomialProgram&) const = default;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// prod_j x_j^alpha_j, evaluated as exp(sum_j alpha_j ln x_j). Uses 0^a = 0
// for a > 0. Returns +inf when the result overflows. Throws kDomain when
// some x_j is negative, or zero with a negative exponent.
double eval_term(const ExponentVector& alpha, std::span<const double> x);

// Dense gradient over x.size() coordinates. Throws kDomain when a coordinate
// on the support of alpha is not strictly positive.
std::vector<double> grad_term(const ExponentVector& alpha,
                              std::span<const double> x);

// Tight range of x^alpha over a box with lower >= 0. A monomial is monotone
// in each coordinate, so the extremes sit at corners chosen coordinatewise.
// hi is +inf when some lower bound is 0 under a negative exponent.
Interval term_range(const ExponentVector& alpha, const Box& xbox);

struct ExtendedForm {
  SignomialProgram base;
  Box zbounds;                     // over z = (x, y), dimension n + k
  std::vector<int> unbounded_terms;  // terms whose y-range is not finite

  int dim() const { return base.n + base.k; }
  int y_index(int term) const { return base.n + term; }
  bool boxed() const { return unbounded_terms.empty() && zbounds.is_finite(); }
};

ExtendedForm lift(const SignomialProgram& program);

// z-bounds for a sub-box of the x-bounds; indices of terms with an infinite
// y-range are appended to `unbounded` when given.
Box lifted_bounds(const SignomialProgram& program, const Box& xbox,
                  std::vector<int>* unbounded = nullptr);

}  // namespace signocut

#endif  // SIGNOCUT_MODEL_HPP_
