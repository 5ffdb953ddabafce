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
#include "signocut/envelope.hpp"
#include "signocut/lp.hpp"
#include "signocut/error.hpp"

using namespace signocut;

namespace {

ExponentVector ev(std::vector<double> dense) { return ExponentVector::from_dense(dense); }

// Corner values of prod_j u_j^beta_j, bit j of the index = coordinate j at its upper bound.
oracle::Vec corner_values(const oracle::Vec& beta, const oracle::Vec& lo, const oracle::Vec& hi) {
  const std::size_t h = beta.size();
  oracle::Vec f(std::size_t{1} << h);
  for (std::size_t q = 0; q < f.size(); ++q) {
    oracle::Vec u(h);
    for (std::size_t j = 0; j < h; ++j) u[j] = (q >> j) & 1u ? hi[j] : lo[j];
    f[q] = oracle::pow_product(beta, u);
  }
  return f;
}

oracle::Vec random_beta(std::mt19937_64& rng, std::size_t h) {
  oracle::Vec b(h);
  double s = 0.0;
  for (auto& x : b) s += (x = oracle::uniform(rng, 0.05, 1.0));
  const double target = oracle::uniform(rng, 0.3, 1.0);
  for (auto& x : b) x *= target / s;
  return b;
}

}  // namespace

TEST_CASE("unit scaling maps corners to the unit cube") {
  const UnitScaling s(Box({1, 2}, {3, 6}));
  const std::vector<double> lo{1, 2}, hi{3, 6}, mid{2, 5};
  CHECK(s.forward(lo) == std::vector<double>{0, 0});
  CHECK(s.forward(hi) == std::vector<double>{1, 1});
  const auto w = s.forward(mid);
  CHECK(w[1] == doctest::Approx(0.75));
  const auto back = s.backward(w);
  CHECK(std::abs(back[0] - 2) <= 1e-12);
  CHECK(std::abs(back[1] - 5) <= 1e-12);
}

TEST_CASE("envelope_value examples") {
  {
    const EnvelopeModel m({0.5}, Box({0}, {1}));
    const std::vector<double> at{0.25};
    const auto e = envelope_value(m, at);
    CHECK(e.value == doctest::Approx(0.25));
    CHECK(e.facet.a[0] == doctest::Approx(1.0));
    CHECK(std::abs(e.facet.b) <= 1e-9);
    CHECK(e.facet(at) == doctest::Approx(e.value));
  }
  {
    const EnvelopeModel m({0.5, 0.5}, Box({0, 0}, {1, 1}));
    CHECK(m.values == std::vector<double>{0, 0, 0, 1});
    const std::vector<double> at{0.5, 0.5};
    const auto e = envelope_value(m, at);
    CHECK(std::abs(e.value) <= 1e-9);
    CHECK(std::abs(e.value - oracle::envelope_primal(m.values, 2, at)) <= 1e-9);
  }
  {
    std::mt19937_64 rng(61);
    const EnvelopeModel m({0.3, 0.2, 0.4}, Box({0.5, 1, 2}, {2, 3, 4}));
    for (std::size_t q = 0; q < m.vertices.size(); ++q) {
      const auto e = envelope_value(m, m.vertices[q]);
      CHECK(std::abs(e.value - m.values[q]) <= 1e-9);
      CHECK(std::abs(m.values[q] - oracle::pow_product(m.beta, m.vertices[q])) <= 1e-12);
    }
  }
}

TEST_CASE("envelope model validation") {
  CHECK_THROWS_AS(EnvelopeModel({0.8, 0.8}, Box({0, 0}, {1, 1})), Error);
  CHECK_THROWS_AS(EnvelopeModel({0.5}, Box({0}, {kLpInf})), Error);
  CHECK_THROWS_AS(EnvelopeModel({0.5}, Box({0, 0}, {1, 1})), Error);
}

TEST_CASE("zero-width sides are reduced out") {
  const EnvelopeModel m({0.5, 0.5}, Box({1, 4}, {1, 9}));
  const std::vector<double> at{1, 6.5};
  const auto e = envelope_value(m, at);
  // Chord of sqrt(u2) between 4 and 9 at 6.5, times sqrt(1).
  CHECK(e.value == doctest::Approx(2.5).epsilon(1e-9));
  CHECK(e.facet.a[0] == 0.0);
  CHECK(envelope_closed_form(m, at).value == doctest::Approx(2.5).epsilon(1e-9));
}

TEST_CASE("bivariate_envelope examples") {
  {
    const std::vector<double> w{1, 1};
    CHECK(bivariate_envelope(0, 0, 0, 1, w).value == doctest::Approx(1.0));
    CHECK(bivariate_envelope(0, 0, 0, 1, w).facet.a == std::vector<double>{1, 1});
  }
  {
    const std::vector<double> w{0.5, 0.5};
    const auto e = bivariate_envelope(0, 0, 0, 1, w);
    CHECK(e.value == 0.0);
    CHECK(e.facet.a == std::vector<double>{0, 0});
    CHECK(e.facet.b == 0.0);
    CHECK(oracle::envelope_primal({0, 0, 0, 1}, 2, w) == doctest::Approx(0.0));
  }
  {
    std::mt19937_64 rng(62);
    for (int s = 0; s < 20; ++s) {
      const std::vector<double> w{oracle::uniform(rng, 0, 1), oracle::uniform(rng, 0, 1)};
      const auto e = bivariate_envelope(0, 1, 1, 2, w);
      CHECK(e.value == doctest::Approx(w[0] + w[1]));
      CHECK(e.facet.a[0] == doctest::Approx(1.0));
      CHECK(e.facet.a[1] == doctest::Approx(1.0));
      CHECK(e.facet.b == doctest::Approx(0.0));
    }
  }
  const std::vector<double> w{0.5, 0.5};
  try {
    bivariate_envelope(0, 1, 1, 1, w);
    FAIL("expected a supermodularity error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSupermodularity);
  }
}

TEST_CASE("check_supermodular examples") {
  std::mt19937_64 rng(63);
  for (int s = 0; s < 20; ++s) {
    const oracle::Vec lo{oracle::uniform(rng, 0, 2), oracle::uniform(rng, 0, 2)};
    const oracle::Vec hi{lo[0] + oracle::uniform(rng, 0.1, 3), lo[1] + oracle::uniform(rng, 0.1, 3)};
    CHECK(check_supermodular(corner_values({0.5, 0.5}, lo, hi), 2));
  }
  const std::vector<double> sub{0, 1, 1, 1};
  CHECK_FALSE(check_supermodular(sub, 2));
  for (int s = 0; s < 20; ++s) {
    const auto lo = oracle::uniform_box(rng, {0, 0, 0}, {2, 2, 2});
    oracle::Vec hi(3);
    for (std::size_t j = 0; j < 3; ++j) hi[j] = lo[j] + oracle::uniform(rng, 0.1, 3);
    CHECK(check_supermodular(corner_values({1.0 / 3, 1.0 / 3, 1.0 / 3}, lo, hi), 3));
  }
  // A single increasing-difference failure deep in the cube is found.
  std::vector<double> f(16, 0.0);
  for (unsigned q = 0; q < 16; ++q) f[q] = __builtin_popcount(q);
  CHECK(check_supermodular(f, 4));
  f[0b1011] -= 0.5;
  CHECK_FALSE(check_supermodular(f, 4));
}

TEST_CASE("oa_cut examples") {
  {
    DccForm form;
    form.beta = {1.0};
    form.u_index = {0};
    form.gamma = {1.0};
    form.v_index = {1};
    const std::vector<double> z{1, 0};
    const auto cut = oa_cut(form, z, Box({0, 0}, {1, 1}));
    REQUIRE(cut.has_value());
    const auto d = cut->to_dense(2);
    CHECK(d[0] == doctest::Approx(1.0));
    CHECK(d[1] == doctest::Approx(-1.0));
    CHECK(std::abs(cut->rhs) <= 1e-9);
    CHECK(cut->violation(z) == doctest::Approx(1.0));
    CHECK(cut->origin == CutOrigin::kOuterApprox);
  }
  {
    const DccForm form = make_dcc(ev({3, 1}), Sense::kEpi, 2);
    const std::vector<double> z{1, 1, 0};
    const auto cut = oa_cut(form, z, Box({0, 0, 0}, {1, 1, 1}));
    REQUIRE(cut.has_value());
    CHECK(cut->violation(z) > 0.0);
    std::mt19937_64 rng(64);
    int found = 0;
    while (found < 10000) {
      const auto p = oracle::uniform_box(rng, {0, 0, 0}, {1, 1, 1});
      if (p[2] < p[0] * p[0] * p[0] * p[1]) continue;
      ++found;
      CHECK(cut->violation(p) <= 1e-7);
    }
  }
  {
    const DccForm form = make_dcc(ev({3, 1}), Sense::kEpi, 2);
    const std::vector<double> z{0.5, 0.5, 0.5};
    CHECK_FALSE(oa_cut(form, z, Box({0, 0, 0}, {1, 1, 1})).has_value());
  }
  {
    const DccForm form = make_dcc(ev({3, 1}), Sense::kEpi, 2);
    const std::vector<double> z{1, 1, 0};
    CHECK_THROWS_AS(oa_cut(form, z, Box({0, 0, 0}, {kLpInf, 1, 1})), Error);
  }
}

TEST_CASE("envelope underestimates and matches the primal oracle") {
  std::mt19937_64 rng(65);
  for (std::size_t h = 1; h <= 3; ++h) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto beta = random_beta(rng, h);
      const auto lo = oracle::uniform_box(rng, oracle::Vec(h, 0.0), oracle::Vec(h, 2.0));
      oracle::Vec hi(h);
      for (std::size_t j = 0; j < h; ++j) hi[j] = lo[j] + oracle::uniform(rng, 0.2, 3);
      const EnvelopeModel m(beta, Box(lo, hi));
      const auto f = corner_values(beta, lo, hi);
      for (int s = 0; s < 50; ++s) {
        const auto w = oracle::uniform_box(rng, oracle::Vec(h, 0.0), oracle::Vec(h, 1.0));
        const auto u = UnitScaling(m.box).backward(w);
        const auto e = envelope_value(m, u);
        CHECK(e.value <= oracle::pow_product(beta, u) + 1e-9);
        CHECK(std::abs(e.value - oracle::envelope_primal(f, static_cast<int>(h), w)) <= 1e-8);
        CHECK(std::abs(e.facet(u) - e.value) <= 1e-8);
        for (std::size_t q = 0; q < m.vertices.size(); ++q) {
          CHECK(e.facet(m.vertices[q]) <= m.values[q] + 1e-9);
        }
      }
    }
  }
}

TEST_CASE("envelope is midpoint convex") {
  std::mt19937_64 rng(66);
  const EnvelopeModel m({0.4, 0.35}, Box({0.2, 0.5}, {3, 4}));
  for (int s = 0; s < 1000; ++s) {
    const auto p = oracle::uniform_box(rng, m.box.lower, m.box.upper);
    const auto q = oracle::uniform_box(rng, m.box.lower, m.box.upper);
    const std::vector<double> mid{(p[0] + q[0]) / 2, (p[1] + q[1]) / 2};
    const double lhs = envelope_closed_form(m, mid).value;
    const double rhs = 0.5 * (envelope_closed_form(m, p).value + envelope_closed_form(m, q).value);
    CHECK(lhs <= rhs + 1e-9);
  }
}

TEST_CASE("the two triangles cover the square and meet on the diagonal") {
  // Barycentric membership of w in conv{00,10,01} and conv{11,10,01}.
  const auto in_s1 = [](double a, double b) { return a >= -1e-12 && b >= -1e-12 && a + b <= 1 + 1e-12; };
  const auto in_s2 = [](double a, double b) { return a <= 1 + 1e-12 && b <= 1 + 1e-12 && a + b >= 1 - 1e-12; };
  for (int i = 0; i <= 40; ++i) {
    for (int j = 0; j <= 40; ++j) {
      const double a = i / 40.0, b = j / 40.0;
      CHECK((in_s1(a, b) || in_s2(a, b)));
      if (in_s1(a, b) && in_s2(a, b)) CHECK(std::abs(a + b - 1) <= 1e-12);
      // Both facets agree exactly on the shared edge.
      if (i + j == 40) {
        const std::vector<double> w{a, b};
        const auto e = bivariate_envelope(0.1, 0.7, 0.4, 1.5, w);
        const double s1 = 0.1 + 0.6 * a + 0.3 * b;
        CHECK(std::abs(e.value - s1) <= 1e-12);
      }
    }
  }
}

TEST_CASE("closed-form facets interpolate their supporting corners") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 50; ++trial) {
    const auto beta = random_beta(rng, 2);
    const auto lo = oracle::uniform_box(rng, {0.1, 0.1}, {2, 2});
    const oracle::Vec hi{lo[0] + oracle::uniform(rng, 0.2, 3), lo[1] + oracle::uniform(rng, 0.2, 3)};
    const auto f = corner_values(beta, lo, hi);
    const std::vector<double> w1{0.2, 0.3}, w2{0.8, 0.7};
    const Facet a = bivariate_envelope(f[0], f[1], f[2], f[3], w1).facet;
    const Facet b = bivariate_envelope(f[0], f[1], f[2], f[3], w2).facet;
    const std::vector<std::vector<double>> sa{{0, 0}, {1, 0}, {0, 1}}, sb{{1, 1}, {1, 0}, {0, 1}};
    const std::vector<std::size_t> ia{0, 1, 2}, ib{3, 1, 2};
    for (std::size_t t = 0; t < 3; ++t) {
      CHECK(std::abs(a(sa[t]) - f[ia[t]]) <= 1e-13);
      CHECK(std::abs(b(sb[t]) - f[ib[t]]) <= 1e-13);
    }
  }
}

TEST_CASE("outer-approximation cuts are valid for random term sets") {
  std::mt19937_64 rng(68);
  int cuts = 0;
  for (int trial = 0; trial < 40 && cuts < 10; ++trial) {
    std::vector<double> a{std::round(oracle::uniform(rng, -3, 3)), std::round(oracle::uniform(rng, -3, 3))};
    if (ev(a).empty()) a[0] = 2;
    const Sense sense = trial % 2 ? Sense::kEpi : Sense::kHypo;
    const DccForm form = make_dcc(ev(a), sense, 2);
    const oracle::Vec xlo{0.5, 0.5}, xhi{2, 2};
    double ylo = oracle::kInf, yhi = 0;
    for (double p : {0.5, 2.0}) {
      for (double q : {0.5, 2.0}) {
        const double g = oracle::pow_product(a, {p, q});
        ylo = std::min(ylo, g);
        yhi = std::max(yhi, g);
      }
    }
    const Box zbox({0.5, 0.5, ylo}, {2, 2, yhi});
    const auto zbar = oracle::uniform_box(rng, zbox.lower, zbox.upper);
    const auto cut = oa_cut(form, zbar, zbox);
    if (!cut) continue;
    ++cuts;
    CHECK(cut->violation(zbar) > 0);
    int found = 0;
    while (found < 10000) {
      auto p = oracle::uniform_box(rng, zbox.lower, zbox.upper);
      const double g = oracle::pow_product(a, {p[0], p[1]});
      if (found % 2) p[2] = g;  // half the samples on the term surface
      if (sense == Sense::kHypo ? p[2] > g : p[2] < g) continue;
      ++found;
      CHECK(cut->violation(p) <= 1e-7);
    }
  }
  CHECK(cuts >= 5);
}
