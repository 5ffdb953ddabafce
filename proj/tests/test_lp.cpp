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


#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "signocut/error.hpp"
#include "signocut/lp.hpp"

using namespace signocut;

namespace {

struct RandomLp {
  oracle::IntLp exact;
  LpModel model;
};

// Integer data; feasible at an integer point inside [0, upper].
RandomLp random_lp(std::mt19937_64& rng, int n, int m) {
  std::uniform_int_distribution<long> coef(-5, 5), ub(1, 6), slack(0, 3), obj(-6, 6);
  RandomLp r;
  r.exact.n = n;
  r.model = LpModel(n);
  std::vector<long> upper(static_cast<std::size_t>(n)), z0(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const auto js = static_cast<std::size_t>(j);
    upper[js] = ub(rng);
    z0[js] = std::uniform_int_distribution<long>(0, upper[js])(rng);
    const long c = obj(rng);
    r.exact.c.push_back(c);
    r.model.objective[js] = static_cast<double>(c);
    r.model.col_upper[js] = static_cast<double>(upper[js]);
  }
  for (int i = 0; i < m; ++i) {
    std::vector<long> g(static_cast<std::size_t>(n));
    std::vector<double> gd(static_cast<std::size_t>(n));
    long act = 0;
    for (int j = 0; j < n; ++j) {
      const auto js = static_cast<std::size_t>(j);
      g[js] = coef(rng);
      gd[js] = static_cast<double>(g[js]);
      act += g[js] * z0[js];
    }
    const long h = act + slack(rng);
    r.exact.g.push_back(g);
    r.exact.h.push_back(h);
    r.model.add_dense_row(gd, -kLpInf, static_cast<double>(h));
  }
  for (int j = 0; j < n; ++j) {
    std::vector<long> lo(static_cast<std::size_t>(n), 0), hi(static_cast<std::size_t>(n), 0);
    lo[static_cast<std::size_t>(j)] = -1;
    hi[static_cast<std::size_t>(j)] = 1;
    r.exact.g.push_back(lo);
    r.exact.h.push_back(0);
    r.exact.g.push_back(hi);
    r.exact.h.push_back(upper[static_cast<std::size_t>(j)]);
  }
  return r;
}

bool feasible(const LpModel& model, const std::vector<double>& z, double tol) {
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (z[j] < model.col_lower[j] - tol || z[j] > model.col_upper[j] + tol) return false;
  }
  for (const auto& row : model.rows) {
    double s = 0.0;
    for (std::size_t t = 0; t < row.index.size(); ++t) {
      s += row.value[t] * z[static_cast<std::size_t>(row.index[t])];
    }
    if (s < row.lower - tol || s > row.upper + tol) return false;
  }
  return true;
}

// Samples the region by shrinking uniform box points toward the vertex, which
// reaches every direction of a convex region even when it is thin.
void check_containment(const LpModel& model, const SimplicialCone& cone, std::mt19937_64& rng,
                       int samples) {
  int found = 0;
  for (int tries = 0; found < samples && tries < 10 * samples; ++tries) {
    const auto p = oracle::uniform_box(rng, model.col_lower, model.col_upper);
    std::vector<double> z(p.size());
    double lambda = 1.0;
    bool ok = false;
    for (int halving = 0; halving < 60 && !ok; ++halving, lambda *= 0.5) {
      for (std::size_t j = 0; j < z.size(); ++j) z[j] = cone.vertex[j] + lambda * (p[j] - cone.vertex[j]);
      ok = feasible(model, z, 1e-9);
    }
    if (!ok) continue;
    ++found;
    CHECK(cone.max_violation(z) <= 1e-7);
  }
  CHECK(found == samples);
}

}  // namespace

TEST_CASE("box optimum") {
  LpModel lp(2);
  lp.objective = {-1, -1};
  lp.col_upper = {1, 1};
  const auto s = solve(lp);
  REQUIRE(s.status == LpStatus::kOptimal);
  CHECK(s.zbar[0] == doctest::Approx(1.0));
  CHECK(s.zbar[1] == doctest::Approx(1.0));
  CHECK(s.objective_value == doctest::Approx(-2.0));
}

TEST_CASE("covering row") {
  LpModel lp(2);
  lp.objective = {1, 0};
  lp.col_upper = {1, 1};
  const std::vector<double> row{1, 1};
  lp.add_dense_row(row, 1.0, kLpInf);
  const auto s = solve(lp);
  REQUIRE(s.status == LpStatus::kOptimal);
  CHECK(std::abs(s.objective_value) <= 1e-12);
  CHECK(s.zbar[1] == doctest::Approx(1.0));
}

TEST_CASE("infeasible, unbounded, equality and free columns") {
  {
    LpModel lp(1);
    const std::vector<double> r{1};
    lp.add_dense_row(r, 2.0, kLpInf);
    lp.add_dense_row(r, -kLpInf, 1.0);
    CHECK(solve(lp).status == LpStatus::kInfeasible);
  }
  {
    LpModel lp(1);
    lp.objective = {-1};
    CHECK(solve(lp).status == LpStatus::kUnbounded);
  }
  {
    LpModel lp(2);
    lp.objective = {1, 0};
    lp.col_lower = {-kLpInf, 1};
    lp.col_upper = {kLpInf, 2};
    const std::vector<double> r{1, -1};
    lp.add_dense_row(r, 0.0, 0.0);
    const auto s = solve(lp);
    REQUIRE(s.status == LpStatus::kOptimal);
    CHECK(s.zbar[0] == doctest::Approx(1.0));
    CHECK(s.objective_value == doctest::Approx(1.0));
  }
}

TEST_CASE("cycling-prone degenerate LP") {
  // Beale's example; optimum -5/4.
  LpModel lp(4);
  lp.objective = {-0.75, 20, -0.5, 6};
  const std::vector<double> r1{0.25, -8, -1, 9}, r2{0.5, -12, -0.5, 3}, r3{0, 0, 1, 0};
  lp.add_dense_row(r1, -kLpInf, 0.0);
  lp.add_dense_row(r2, -kLpInf, 0.0);
  lp.add_dense_row(r3, -kLpInf, 1.0);
  const auto s = solve(lp);
  REQUIRE(s.status == LpStatus::kOptimal);
  CHECK(s.objective_value == doctest::Approx(-1.25).epsilon(1e-9));
}

TEST_CASE("random LPs match exact vertex enumeration") {
  std::mt19937_64 rng(41);
  int feasible_count = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 4;
    const int m = 2 + (trial * 7) % 5;
    const RandomLp r = random_lp(rng, n, m);
    const auto exact = oracle::vertex_enumeration_min(r.exact);
    REQUIRE(exact.has_value());
    const auto s = solve(r.model);
    REQUIRE(s.status == LpStatus::kOptimal);
    CHECK(std::abs(s.objective_value - static_cast<double>(*exact)) <= 1e-7);
    CHECK(feasible(r.model, s.zbar, 1e-7));
    ++feasible_count;
  }
  CHECK(feasible_count == 20);
}

TEST_CASE("cone of a box corner") {
  LpModel lp(2);
  lp.objective = {-1, -1};
  lp.col_upper = {1, 1};
  const auto s = solve(lp);
  const SimplicialCone cone = extract_cone(lp, s);
  REQUIRE(cone.rays.size() == 2);
  for (const auto& ray : cone.rays) {
    const std::vector<double> inside{1.0 + 0.5 * ray[0], 1.0 + 0.5 * ray[1]};
    CHECK(feasible(lp, inside, 1e-12));
    CHECK(std::abs(ray[0]) + std::abs(ray[1]) == doctest::Approx(1.0));
  }
  CHECK(std::abs(cone.rays[0][0] * cone.rays[1][1] - cone.rays[0][1] * cone.rays[1][0]) ==
        doctest::Approx(1.0));
}

TEST_CASE("cone at a vertex of a triangle contains the region") {
  LpModel lp(2);
  lp.objective = {-1, 0};
  lp.col_upper = {5, 5};
  const std::vector<double> r{1, 1};
  lp.add_dense_row(r, -kLpInf, 3.0);
  const auto s = solve(lp);
  REQUIRE(s.status == LpStatus::kOptimal);
  CHECK(s.zbar[0] == doctest::Approx(3.0));
  CHECK(std::abs(s.zbar[1]) <= 1e-12);
  const SimplicialCone cone = extract_cone(lp, s);
  // Rays along the two edges leaving (3, 0).
  bool edge_diag = false, edge_axis = false;
  for (const auto& ray : cone.rays) {
    if (ray[0] < 0 && std::abs(ray[0] + ray[1]) <= 1e-12) edge_diag = true;
    if (ray[0] < 0 && std::abs(ray[1]) <= 1e-12) edge_axis = true;
  }
  CHECK(edge_diag);
  CHECK(edge_axis);
  std::mt19937_64 rng(42);
  check_containment(lp, cone, rng, 1000);
}

TEST_CASE("rays invert the row matrix") {
  std::mt19937_64 rng(43);
  int built = 0;
  while (built < 50) {
    const std::size_t p = 2 + static_cast<std::size_t>(built % 5);
    std::vector<std::vector<double>> b(p, std::vector<double>(p));
    for (auto& row : b) {
      for (auto& v : row) v = oracle::uniform(rng, -2, 2);
    }
    SimplicialCone cone;
    try {
      cone = make_cone(std::vector<double>(p, 0.0), b);
    } catch (const Error&) {
      continue;
    }
    ++built;
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < p; ++j) {
        double s = 0.0;
        for (std::size_t c = 0; c < p; ++c) s += b[i][c] * -cone.rays[j][c];
        CHECK(std::abs(s - (i == j ? 1.0 : 0.0)) <= 1e-9);
      }
    }
    for (std::size_t j = 0; j < p; ++j) {
      std::vector<double> z(p);
      for (std::size_t c = 0; c < p; ++c) z[c] = 3.7 * cone.rays[j][c];
      CHECK(cone.max_violation(z) <= 1e-9);
    }
  }
  const std::vector<std::vector<double>> singular{{1, 2}, {2, 4}};
  CHECK_THROWS_AS(make_cone({0, 0}, singular), Error);
}

TEST_CASE("basis cones of random LPs contain the region") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 10; ++trial) {
    RandomLp r = random_lp(rng, 3, 3);
    const auto s = solve(r.model);
    REQUIRE(s.status == LpStatus::kOptimal);
    const SimplicialCone cone = extract_cone(r.model, s);
    check_containment(r.model, cone, rng, 1000);
  }
}

TEST_CASE("degenerate vertex") {
  LpModel lp(2);
  lp.objective = {-1, -1};
  lp.col_upper = {1, 1};
  const std::vector<double> r{1, 1};
  lp.add_dense_row(r, -kLpInf, 2.0);
  const auto s = solve(lp);
  REQUIRE(s.status == LpStatus::kOptimal);
  CHECK(s.objective_value == doctest::Approx(-2.0));
  CHECK(s.degenerate);
  const SimplicialCone cone = extract_cone(lp, s);
  std::mt19937_64 rng(45);
  check_containment(lp, cone, rng, 1000);
}

TEST_CASE("cone from active constraints") {
  LpModel lp(2);
  lp.col_upper = {3, 3};
  const std::vector<double> r{1, 1};
  lp.add_dense_row(r, -kLpInf, 3.0);
  const std::vector<double> vertex{3.0, 0.0};
  const auto cone = cone_from_active(lp, vertex);
  std::mt19937_64 rng(46);
  check_containment(lp, cone, rng, 1000);
  const std::vector<double> edge{1.5, 0.0};
  CHECK_THROWS_AS(cone_from_active(lp, edge), Error);
}
