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

#include "signocut/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "signocut/error.hpp"

namespace signocut {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string index_message(const char* what, int i) {
  std::ostringstream os;
  os << what << " " << i;
  return os.str();
}

}  // namespace

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kUnbounded: return "unbounded";
    case ErrorCode::kNumerical: return "numerical";
    case ErrorCode::kDegenerate: return "degenerate";
    case ErrorCode::kTrivialCut: return "trivial_cut";
    case ErrorCode::kSupermodularity: return "supermodularity_violated";
    case ErrorCode::kUnbranchable: return "unbranchable";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

ExponentVector::ExponentVector(std::vector<VarPower> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const VarPower& a, const VarPower& b) { return a.var < b.var; });
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].var < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  index_message("negative variable index", entries[i].var));
    }
    if (i > 0 && entries[i].var == entries[i - 1].var) {
      throw Error(ErrorCode::kInvalidArgument,
                  index_message("repeated variable index", entries[i].var));
    }
    if (!std::isfinite(entries[i].exponent)) {
      throw Error(ErrorCode::kInvalidArgument,
                  index_message("non-finite exponent on variable",
                                entries[i].var));
    }
    if (entries[i].exponent != 0.0) entries_.push_back(entries[i]);
  }
}

ExponentVector ExponentVector::from_dense(std::span<const double> alpha) {
  std::vector<VarPower> e;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    e.push_back({static_cast<int>(j), alpha[j]});
  }
  return ExponentVector(std::move(e));
}

double ExponentVector::exponent(int var) const {
  for (const auto& e : entries_) {
    if (e.var == var) return e.exponent;
  }
  return 0.0;
}

int ExponentVector::max_var() const {
  return entries_.empty() ? -1 : entries_.back().var;
}

double ExponentVector::l1_norm() const {
  double s = 0.0;
  for (const auto& e : entries_) s += std::abs(e.exponent);
  return s;
}

ExponentVector ExponentVector::negated() const {
  ExponentVector out = *this;
  for (auto& e : out.entries_) e.exponent = -e.exponent;
  return out;
}

Box::Box(std::vector<double> lo, std::vector<double> hi)
    : lower(std::move(lo)), upper(std::move(hi)) {
  if (lower.size() != upper.size()) {
    throw Error(ErrorCode::kInvalidArgument, "box bound vectors differ in size");
  }
}

bool Box::contains(std::span<const double> x, double tol) const {
  if (x.size() != dim()) return false;
  for (std::size_t j = 0; j < dim(); ++j) {
    if (x[j] < lower[j] - tol || x[j] > upper[j] + tol) return false;
  }
  return true;
}

bool Box::is_finite() const {
  for (std::size_t j = 0; j < dim(); ++j) {
    if (!std::isfinite(lower[j]) || !std::isfinite(upper[j])) return false;
  }
  return true;
}

void SparseMatrix::add(int row, int col, double value) {
  entries.push_back({row, col, value});
}

void SparseMatrix::normalize() {
  std::sort(entries.begin(), entries.end(),
            [](const Triplet& a, const Triplet& b) {
              return a.row != b.row ? a.row < b.row : a.col < b.col;
            });
  std::vector<Triplet> merged;
  for (const auto& t : entries) {
    if (!merged.empty() && merged.back().row == t.row &&
        merged.back().col == t.col) {
      merged.back().value += t.value;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Triplet& t) { return t.value == 0.0; });
  entries = std::move(merged);
}

std::vector<double> SparseMatrix::row_dense(int row) const {
  std::vector<double> out(static_cast<std::size_t>(cols), 0.0);
  for (const auto& t : entries) {
    if (t.row == row) out[static_cast<std::size_t>(t.col)] += t.value;
  }
  return out;
}

void SignomialProgram::validate() const {
  auto fail = [](const std::string& msg) {
    throw Error(ErrorCode::kInvalidArgument, msg);
  };
  if (n < 0 || k < 0 || m < 0) fail("negative dimension");
  if (static_cast<int>(c.size()) != n) fail("objective length differs from n");
  if (static_cast<int>(d.size()) != m) fail("rhs length differs from m");
  if (static_cast<int>(terms.size()) != k) fail("term count differs from k");
  if (static_cast<int>(bounds.dim()) != n) fail("bounds dimension differs from n");
  if (A.rows != m || A.cols != n) fail("A has wrong shape");
  if (B.rows != m || B.cols != k) fail("B has wrong shape");
  for (const auto& t : A.entries) {
    if (t.row < 0 || t.row >= m || t.col < 0 || t.col >= n) {
      fail(index_message("A entry out of range in row", t.row));
    }
  }
  for (const auto& t : B.entries) {
    if (t.row < 0 || t.row >= m || t.col < 0 || t.col >= k) {
      fail(index_message("B entry out of range in row", t.row));
    }
  }
  for (int i = 0; i < k; ++i) {
    if (terms[static_cast<std::size_t>(i)].empty()) {
      fail(index_message("term has no nonzero exponent: term", i));
    }
    if (terms[static_cast<std::size_t>(i)].max_var() >= n) {
      fail(index_message("term references a variable >= n: term", i));
    }
  }
  for (int j = 0; j < n; ++j) {
    const auto jj = static_cast<std::size_t>(j);
    if (!(bounds.lower[jj] >= 0.0)) fail(index_message("negative lower bound on x", j));
    if (bounds.lower[jj] > bounds.upper[jj]) fail(index_message("empty bound range on x", j));
  }
}

double eval_term(const ExponentVector& alpha, std::span<const double> x) {
  double log_sum = 0.0;
  bool zero = false;
  for (const auto& e : alpha.entries()) {
    if (e.var >= static_cast<int>(x.size())) {
      throw Error(ErrorCode::kInvalidArgument,
                  index_message("term references missing coordinate", e.var));
    }
    const double xj = x[static_cast<std::size_t>(e.var)];
    if (xj < 0.0 || std::isnan(xj)) {
      throw Error(ErrorCode::kDomain,
                  index_message("negative coordinate under a power at", e.var));
    }
    if (xj == 0.0) {
      if (e.exponent < 0.0) {
        throw Error(ErrorCode::kDomain,
                    index_message("zero coordinate under a negative power at",
                                  e.var));
      }
      zero = true;
      continue;
    }
    log_sum += e.exponent * std::log(xj);
  }
  if (zero) return 0.0;
  return std::exp(log_sum);  // +inf on overflow
}

std::vector<double> grad_term(const ExponentVector& alpha,
                              std::span<const double> x) {
  std::vector<double> g(x.size(), 0.0);
  for (const auto& e : alpha.entries()) {
    if (e.var >= static_cast<int>(x.size()) ||
        !(x[static_cast<std::size_t>(e.var)] > 0.0)) {
      throw Error(ErrorCode::kDomain,
                  index_message("gradient needs a positive coordinate at", e.var));
    }
  }
  const double value = eval_term(alpha, x);
  for (const auto& e : alpha.entries()) {
    const auto j = static_cast<std::size_t>(e.var);
    g[j] = e.exponent * value / x[j];
  }
  return g;
}

Interval term_range(const ExponentVector& alpha, const Box& xbox) {
  std::vector<double> at_min(xbox.dim(), 1.0);
  std::vector<double> at_max(xbox.dim(), 1.0);
  bool max_infinite = false;
  for (const auto& e : alpha.entries()) {
    const auto j = static_cast<std::size_t>(e.var);
    if (j >= xbox.dim()) {
      throw Error(ErrorCode::kInvalidArgument,
                  index_message("term references missing coordinate", e.var));
    }
    const double lo = xbox.lower[j];
    const double hi = xbox.upper[j];
    if (e.exponent > 0.0) {
      at_min[j] = lo;
      at_max[j] = hi;
      if (std::isinf(hi)) max_infinite = true;
    } else {
      at_min[j] = hi;
      at_max[j] = lo;
      if (lo == 0.0) max_infinite = true;
    }
  }
  Interval r;
  // An infinite coordinate under a negative power drives the minimum to 0.
  bool min_zero = false;
  for (const auto& e : alpha.entries()) {
    const auto j = static_cast<std::size_t>(e.var);
    if (std::isinf(at_min[j])) min_zero = true;
  }
  if (min_zero) {
    r.lo = 0.0;
  } else {
    r.lo = eval_term(alpha, at_min);
  }
  r.hi = max_infinite ? kInf : eval_term(alpha, at_max);
  return r;
}

Box lifted_bounds(const SignomialProgram& program, const Box& xbox,
                  std::vector<int>* unbounded) {
  const auto n = static_cast<std::size_t>(program.n);
  const auto k = static_cast<std::size_t>(program.k);
  if (xbox.dim() != n) {
    throw Error(ErrorCode::kInvalidArgument, "x-box dimension differs from n");
  }
  Box z;
  z.lower.resize(n + k);
  z.upper.resize(n + k);
  std::copy(xbox.lower.begin(), xbox.lower.end(), z.lower.begin());
  std::copy(xbox.upper.begin(), xbox.upper.end(), z.upper.begin());
  for (std::size_t i = 0; i < k; ++i) {
    const Interval r = term_range(program.terms[i], xbox);
    z.lower[n + i] = r.lo;
    z.upper[n + i] = r.hi;
    if (unbounded != nullptr && !std::isfinite(r.hi)) {
      unbounded->push_back(static_cast<int>(i));
    }
  }
  return z;
}

ExtendedForm lift(const SignomialProgram& program) {
  program.validate();
  ExtendedForm ext;
  ext.base = program;
  ext.zbounds = lifted_bounds(program, program.bounds, &ext.unbounded_terms);
  return ext;
}

}  // namespace signocut
