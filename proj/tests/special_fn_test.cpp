// Copyright 2026 The fracquad Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fracquad/errors.hpp"
#include "fracquad/special_fn.hpp"
#include "test_support.hpp"

using namespace fracquad;
namespace sf = fracquad::special;
using namespace fracquad::special;

TEST_CASE("gamma matches known values and std::tgamma") {
  CHECK(sf::gamma(1.5) == doctest::Approx(std::sqrt(std::numbers::pi) / 2).epsilon(1e-14));
  CHECK(sf::gamma(5.0) == doctest::Approx(24.0).epsilon(1e-14));
  for (double x = 0.5; x <= 170.0; x += 0.37) {
    INFO("x = " << x);
    CHECK(testing::relative(sf::gamma(x), std::tgamma(x)) < 1e-13);
  }
  CHECK(testing::relative(sf::gamma(170.0), std::tgamma(170.0)) < 1e-13);
  // reflection branch
  CHECK(testing::relative(sf::gamma(-0.5), -2.0 * std::sqrt(std::numbers::pi)) < 1e-13);
  CHECK(testing::relative(sf::gamma(0.25), std::tgamma(0.25)) < 1e-13);
}

TEST_CASE("gamma poles and overflow") {
  CHECK_THROWS_AS(sf::gamma(0.0), PoleError);
  CHECK_THROWS_AS(sf::gamma(-1.0), PoleError);
  CHECK_THROWS_AS(sf::gamma(-7.0), PoleError);
  CHECK_THROWS_AS(sf::gamma(171.0), OverflowError);
  CHECK_THROWS_AS(sf::gamma(std::nan("")), DomainError);
}

TEST_CASE("log_gamma") {
  CHECK(std::fabs(log_gamma(1.0)) < 1e-15);
  CHECK(std::fabs(log_gamma(2.0)) < 1e-15);

  // ln 170! summed in extended precision.
  long double ln_fact = 0.0L;
  for (int k = 1; k <= 170; ++k) ln_fact += std::log(static_cast<long double>(k));
  const double lg171 = log_gamma(171.0);
  CHECK(std::isfinite(lg171));
  CHECK(testing::relative(lg171, static_cast<double>(ln_fact)) < 1e-12);

  for (double x : {0.1, 0.7, 3.3, 25.0, 1e3, 1e8, 1e300}) {
    INFO("x = " << x);
    CHECK(testing::relative(log_gamma(x), std::lgamma(x)) < 1e-12);
  }
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(log_gamma(-2.5), DomainError);
}

TEST_CASE("lower incomplete gamma") {
  CHECK(lower_incomplete_gamma(0.0, 0.5) == 0.0);
  CHECK(lower_incomplete_gamma(INFINITY, 0.5) ==
        doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
  CHECK(testing::relative(lower_incomplete_gamma(200.0, 0.5), std::sqrt(std::numbers::pi)) < 1e-14);

  // u = v^2 removes the endpoint singularity: 2 int_0^1 e^{-v^2} dv.
  const double quad = 2.0 * testing::adaptive_simpson([](double v) { return std::exp(-v * v); },
                                                      0.0, 1.0, 1e-14);
  CHECK(std::fabs(lower_incomplete_gamma(1.0, 0.5) - quad) < 1e-10);

  // Literal alternating series agrees where it is well conditioned.
  for (double a : {0.25, 0.5, 0.75, 1.5}) {
    for (double t : {0.1, 1.0, 2.5, 5.0}) {
      CHECK(testing::relative(lower_incomplete_gamma(t, a),
                              testing::incomplete_gamma_alternating(t, a)) < 1e-12);
    }
  }
  // sf::gamma(t, 1) = 1 - e^-t across both branches.
  for (double t : {0.5, 10.0, 19.9, 20.1, 35.0}) {
    CHECK(testing::relative(lower_incomplete_gamma(t, 1.0), -std::expm1(-t)) < 1e-13);
  }
  CHECK_THROWS_AS(lower_incomplete_gamma(-1.0, 0.5), DomainError);
  CHECK_THROWS_AS(lower_incomplete_gamma(1.0, 0.0), DomainError);
}

TEST_CASE("lower incomplete gamma is nondecreasing and bounded by Gamma") {
  for (double a : {0.25, 0.5, 0.75, 2.0}) {
    const double full = sf::gamma(a);
    double prev = 0.0;
    for (double t = 0.0; t <= 40.0; t += 0.05) {
      const double v = lower_incomplete_gamma(t, a);
      CHECK(v >= prev);
      CHECK(v <= full * (1.0 + 1e-15));
      prev = v;
    }
  }
}

TEST_CASE("generalized binomial") {
  CHECK(generalized_binomial(3.0, 2) == 3.0);
  CHECK(generalized_binomial(-0.5, 2) == doctest::Approx(0.375).epsilon(1e-15));
  CHECK(generalized_binomial(0.5, 0) == 1.0);

  const double c400 = generalized_binomial(0.5, 400);
  CHECK(std::isfinite(c400));
  CHECK(testing::relative(c400, testing::binomial_via_lgamma(0.5, 400)) < 1e-10);

  SUBCASE("Pascal identity") {
    for (double a = -2.0; a <= 2.0; a += 0.35) {
      for (std::size_t k = 1; k <= 100; ++k) {
        const double lhs = generalized_binomial(a, k);
        const double rhs = generalized_binomial(a - 1.0, k) + generalized_binomial(a - 1.0, k - 1);
        CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::max(std::fabs(lhs), 1e-300) + 1e-300);
      }
    }
  }
  SUBCASE("vanishes past a nonnegative integer") {
    for (int n = 0; n <= 6; ++n) {
      for (std::size_t k = n + 1; k < 40; ++k) CHECK(std::fabs(generalized_binomial(n, k)) <= 1e-15);
    }
  }
  SUBCASE("magnitude decreases for 0 < alpha < 1") {
    for (double a : {0.1, 0.5, 0.9}) {
      double prev = std::fabs(generalized_binomial(a, 1));
      for (std::size_t k = 2; k < 2000; ++k) {
        const double cur = std::fabs(generalized_binomial(a, k));
        CHECK(cur < prev);
        prev = cur;
      }
    }
  }
}
