// Copyright 2026 The fracquad Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "fracquad/errors.hpp"
#include "fracquad/special_fn.hpp"
#include "fracquad/weights.hpp"
#include "test_support.hpp"

using namespace fracquad;

namespace {
constexpr std::array<double, 2> kEulerSigma = {0.0, 1.0};  // sigma(zeta) = zeta
constexpr std::array<double, 2> kEulerRho = {-1.0, 1.0};   // rho(zeta) = zeta - 1
}  // namespace

TEST_CASE("gl_weights examples") {
  const auto w1 = gl_weights(0.5, 1.0, 1);
  REQUIRE(w1.size() == 1);
  CHECK(w1[0] == 1.0);

  const auto w3 = gl_weights(0.5, 1.0, 3);
  CHECK(w3[0] == 1.0);
  CHECK(w3[1] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(w3[2] == doctest::Approx(0.375).epsilon(1e-15));

  const auto rect = gl_weights(1.0, 0.1, 5);
  for (double v : rect.values()) CHECK(v == doctest::Approx(0.1).epsilon(1e-15));

  CHECK_THROWS_AS(gl_weights(0.5, 0.0, 3), DomainError);
  CHECK_THROWS_AS(gl_weights(0.5, -1.0, 3), DomainError);
  CHECK_THROWS_AS(gl_weights(0.0, 1.0, 3), DomainError);
}

TEST_CASE("gl_weights equal (-1)^k C(-alpha, k) dt^alpha") {
  for (double a : {0.25, 0.5, 0.75, 1.3, -0.5, -1.7}) {
    const double dt = 0.37;
    const auto w = gl_weights(a, dt, 60);
    for (std::size_t k = 0; k < 60; ++k) {
      const double expected =
          std::pow(dt, a) * ((k % 2) ? -1.0 : 1.0) * special::generalized_binomial(-a, k);
      CHECK(std::fabs(w[k] - expected) <= 1e-13 * std::fabs(expected) + 1e-300);
    }
  }
}

TEST_CASE("gl weight signs") {
  SUBCASE("integral weights are positive") {
    const auto w = gl_weights(0.6, 1.0, 5000);
    for (double v : w.values()) CHECK(v > 0.0);
  }
  SUBCASE("derivative weights: w0 > 0, rest negative, partial sums decrease to 0") {
    const auto w = gl_weights(-0.6, 1.0, 20000);
    CHECK(w[0] > 0.0);
    double partial = w[0];
    for (std::size_t k = 1; k < w.size(); ++k) {
      CHECK(w[k] < 0.0);
      const double next = partial + w[k];
      CHECK(next < partial);
      CHECK(next > 0.0);
      partial = next;
    }
    CHECK(partial < 0.01);
  }
}

TEST_CASE("nc0_weights examples") {
  const auto c = nc0_weights(1.0, 0.1, 3);
  for (double v : c.values()) CHECK(v == doctest::Approx(0.1).epsilon(1e-14));

  const auto c1 = nc0_weights(0.5, 1.0, 1);
  CHECK(c1[0] == doctest::Approx(1.1283791670955126).epsilon(1e-14));

  // k = 1 panel: (1/Gamma(a)) int_0^1 (2 - s)^(a-1) ds, smooth integrand.
  const auto c2 = nc0_weights(0.5, 1.0, 2);
  const double panel = testing::adaptive_simpson(
                           [](double s) { return std::pow(2.0 - s, -0.5); }, 0.0, 1.0, 1e-15) /
                       std::tgamma(0.5);
  CHECK(std::fabs(c2[1] - panel) < 1e-12);
  CHECK(c2[1] == doctest::Approx(0.46738995451021814).epsilon(1e-14));

  CHECK_THROWS_AS(nc0_weights(0.0, 1.0, 2), DomainError);
  CHECK_THROWS_AS(nc0_weights(0.5, 0.0, 2), DomainError);
}

TEST_CASE("nc0 weights telescope to (dt N)^alpha / Gamma(alpha + 1)") {
  for (double a : {0.1, 0.5, 0.9, 1.7}) {
    for (std::size_t n : {1u, 10u, 1000u, 100000u}) {
      const double dt = 0.013;
      const auto c = nc0_weights(a, dt, n);
      long double sum = 0.0L;
      for (double v : c.values()) sum += v;
      const double expected = std::pow(dt * n, a) / std::tgamma(a + 1.0);
      CHECK(testing::relative(static_cast<double>(sum), expected) < 1e-12);
    }
  }
}

TEST_CASE("flmm_weights") {
  SUBCASE("implicit Euler generator reproduces GL") {
    for (double a : {0.25, 0.5, 0.75}) {
      const auto f = flmm_weights(kEulerSigma, kEulerRho, a, 0.01, 10000);
      const auto g = gl_weights(a, 0.01, 10000);
      double worst = 0.0;
      for (std::size_t k = 0; k < f.size(); ++k) worst = std::max(worst, testing::relative(f[k], g[k]));
      CHECK(worst < 1e-12);
    }
  }
  SUBCASE("alpha = 1 gives the classical quadrature weights") {
    const auto trap = flmm_trap_weights(1.0, 0.2, 6);
    CHECK(trap[0] == doctest::Approx(0.1).epsilon(1e-15));
    for (std::size_t k = 1; k < 6; ++k) CHECK(trap[k] == doctest::Approx(0.2).epsilon(1e-15));
    const auto euler = flmm_weights(kEulerSigma, kEulerRho, 1.0, 0.2, 6);
    for (double v : euler.values()) CHECK(v == doctest::Approx(0.2).epsilon(1e-15));
  }
  SUBCASE("trapezoid generator matches binomial convolution oracle") {
    const std::size_t n = 50;
    const auto up = testing::binomial_series(0.5, 1.0, n);     // (1 + z)^0.5
    const auto down = testing::binomial_series(-0.5, -1.0, n); // (1 - z)^-0.5
    const auto w = flmm_trap_weights(0.5, 1.0, n);
    for (std::size_t m = 0; m < n; ++m) {
      double conv = 0.0;
      for (std::size_t k = 0; k <= m; ++k) conv += up[k] * down[m - k];
      conv *= std::pow(2.0, -0.5);
      CHECK(std::fabs(w[m] - conv) < 1e-12);
    }
  }
  SUBCASE("agrees with series division followed by Miller's power") {
    const std::array<double, 3> sigma = {0.0, 0.5, 0.5};  // zeta (zeta+1)/2 over zeta (zeta-1)
    const std::array<double, 3> rho = {0.0, -1.0, 1.0};
    const std::array<double, 2> num = {0.5, 0.5};
    const std::array<double, 2> den = {1.0, -1.0};
    const auto quotient = series::divide(num, den, 400);
    const auto miller = series::power(quotient, 0.3, 400);
    const auto w = flmm_weights(sigma, rho, 0.3, 1.0, 400);
    for (std::size_t m = 0; m < 400; ++m) CHECK(testing::relative(w[m], miller[m]) < 1e-10);
  }
  SUBCASE("explicit methods are degenerate") {
    const std::array<double, 1> sigma = {1.0};  // explicit Euler: sigma = 1
    CHECK_THROWS_AS(flmm_weights(sigma, kEulerRho, 0.5, 1.0, 10), DegenerateMethodError);
  }
}

TEST_CASE("weights stay finite for a million entries") {
  constexpr std::size_t n = 1000000;
  for (const auto& w : {gl_weights(0.5, 1e-5, n), gl_weights(-0.5, 1e-5, n), nc0_weights(0.5, 1e-5, n),
                        flmm_trap_weights(0.5, 1e-5, n)}) {
    bool finite = true;
    for (double v : w.values()) finite = finite && std::isfinite(v);
    CHECK(finite);
    CHECK(w[0] > 0.0);
  }
}

TEST_CASE("starting weights") {
  SUBCASE("s = 0 single equation") {
    for (double a : {0.3, 0.5, 1.0}) {
      const auto w = gl_weights(a, 1.0, 20);
      for (std::size_t n = 0; n < 20; ++n) {
        double sum = 0.0;
        for (std::size_t k = 0; k <= n; ++k) sum += w[k];
        const auto mu = starting_weights(w, 0, n);
        REQUIRE(mu.size() == 1);
        CHECK(mu[0] == doctest::Approx(std::pow(n, a) / std::tgamma(1.0 + a) - sum).epsilon(1e-13));
      }
    }
  }
  SUBCASE("alpha = 1 rectangle defect at n = 4") {
    // Right rectangle sums n + 1 ones for int_0^4 1 dt = 4, defect -1.
    const auto mu = starting_weights(gl_weights(1.0, 1.0, 8), 0, 4);
    CHECK(mu[0] == doctest::Approx(-1.0).epsilon(1e-14));
  }
  SUBCASE("s = 1 corrected GL integrates t exactly") {
    const std::size_t steps = 64;
    const double dt = 1.0 / steps;
    const auto w = gl_weights(0.5, dt, steps + 1);
    const auto mu = starting_weights(w, 1, steps);
    double approx = 0.0;
    for (std::size_t k = 0; k <= steps; ++k) approx += w[steps - k] * (k * dt);
    approx += std::pow(dt, 0.5) * (mu[0] * 0.0 + mu[1] * dt);
    CHECK(std::fabs(approx - 1.0 / std::tgamma(2.5)) < 1e-10);
  }
  SUBCASE("table rows reproduce monomials up to degree s") {
    for (int s = 0; s <= 3; ++s) {
      const auto w = nc0_weights(0.4, 0.1, 30);
      const auto table = starting_weight_table(w, s, 30);
      for (std::size_t n = s; n < 30; ++n) {
        for (int q = 0; q <= s; ++q) {
          double plain = 0.0;
          for (std::size_t k = 0; k + 1 <= n; ++k) plain += w[n - 1 - k] * std::pow(k * 0.1, q);
          double corr = 0.0;
          for (int j = 0; j <= s; ++j) corr += table.rows[n][j] * std::pow(j * 0.1, q);
          const double exact = std::tgamma(q + 1.0) / std::tgamma(q + 1.4) * std::pow(n * 0.1, q + 0.4);
          CHECK(std::fabs(plain + std::pow(0.1, 0.4) * corr - exact) < 1e-10 * std::max(1.0, exact));
        }
      }
    }
  }
  CHECK_THROWS_AS(starting_weights(gl_weights(0.5, 1.0, 10), 4, 5), DomainError);
  CHECK_THROWS_AS(starting_weights(gl_weights(0.5, 1.0, 10), 2, 1), DomainError);
}
