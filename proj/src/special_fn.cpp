// Copyright 2026 The fracquad Authors
// SPDX-License-Identifier: Apache-2.0

#include "fracquad/special_fn.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fracquad/errors.hpp"

namespace fracquad::special {
namespace {

// Lanczos approximation, g = 7, nine terms.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_sum(double z) {
  double a = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    a += kLanczos[i] / (z + static_cast<double>(i));
  }
  return a;
}

bool is_non_positive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// sin(pi x) with argument reduction, exact zeros at integers.
double sin_pi(double x) {
  double r = std::fmod(x, 2.0);
  if (r < 0.0) r += 2.0;
  if (r == 0.0 || r == 1.0) return 0.0;
  if (r > 1.0) return -std::sin(std::numbers::pi * (r - 1.0));
  return std::sin(std::numbers::pi * r);
}

}  // namespace

double gamma(double x) {
  if (!std::isfinite(x)) {
    throw DomainError("gamma: argument must be finite");
  }
  if (is_non_positive_integer(x)) {
    throw PoleError("gamma: pole at x = " + std::to_string(x));
  }
  if (x > kGammaMaxArg) {
    throw OverflowError("gamma: argument " + std::to_string(x) +
                        " exceeds 170, use log_gamma");
  }
  if (x < 0.5) {
    const double reflected = 1.0 - x;
    const double s = sin_pi(x);
    if (reflected > kGammaMaxArg) {
      // |Gamma(x)| is below the smallest normal double here.
      const double sign = (s > 0.0) ? 1.0 : -1.0;
      return sign * std::exp(std::log(std::numbers::pi / std::fabs(s)) -
                             log_gamma(reflected));
    }
    return std::numbers::pi / (s * gamma(reflected));
  }
  // Shift into [1, 2) by the recurrence; x - 1 is exact for x >= 2.
  double r = x;
  double scale = 1.0;
  while (r >= 2.0) {
    r -= 1.0;
    scale *= r;
  }
  const double z = r - 1.0;
  const double t = z + kLanczosG + 0.5;
  return scale * std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) *
         lanczos_sum(z);
}

double reciprocal_gamma(double x) {
  if (is_non_positive_integer(x)) return 0.0;
  if (x > kGammaMaxArg) return std::exp(-log_gamma(x));
  return 1.0 / gamma(x);
}

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw DomainError("log_gamma: argument must be positive");
  }
  if (std::isinf(x)) return x;
  if (x < 0.5) {
    return log_gamma(x + 1.0) - std::log(x);
  }
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t +
         std::log(lanczos_sum(z));
}

double lower_incomplete_gamma(double t, double alpha) {
  if (std::isnan(t) || t < 0.0) {
    throw DomainError("lower_incomplete_gamma: t must be >= 0");
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("lower_incomplete_gamma: alpha must be > 0");
  }
  if (t == 0.0) return 0.0;
  if (std::isinf(t)) return gamma(alpha);

  constexpr double kEps = 1e-16;
  constexpr int kMaxTerms = 100000;

  if (t <= 20.0 || t < alpha + 1.0) {
    // Taylor series in the form t^a e^-t sum t^n / (a (a+1) ... (a+n)),
    // all terms positive.
    double term = 1.0 / alpha;
    double sum = term;
    for (int n = 1; n < kMaxTerms; ++n) {
      term *= t / (alpha + n);
      sum += term;
      if (term < kEps * sum) break;
    }
    return sum * std::exp(alpha * std::log(t) - t);
  }

  // Upper tail Gamma(alpha, t) by modified Lentz continued fraction.
  constexpr double kTiny = std::numeric_limits<double>::min() / kEps;
  double b = t + 1.0 - alpha;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxTerms; ++i) {
    const double an = -i * (i - alpha);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEps) break;
  }
  const double upper = std::exp(alpha * std::log(t) - t) * h;
  return gamma(alpha) - upper;
}

double generalized_binomial(double alpha, std::size_t k) {
  double c = 1.0;
  for (std::size_t j = 1; j <= k; ++j) {
    const double jd = static_cast<double>(j);
    c *= (alpha - jd + 1.0) / jd;
    if (c == 0.0) break;
  }
  return c;
}

}  // namespace fracquad::special
