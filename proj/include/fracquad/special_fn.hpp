// Copyright 2026 The fracquad Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

namespace fracquad::special {

/// Largest argument accepted by gamma(). Above it the factorial-type growth
/// leaves double range for practical purposes; callers use log_gamma().
inline constexpr double kGammaMaxArg = 170.0;

/// Gamma function for real x (Lanczos approximation, reflection below 0.5).
/// Throws PoleError at 0, -1, -2, ... and OverflowError for x > 170.
double gamma(double x);

/// 1 / Gamma(x), zero at the poles of Gamma.
double reciprocal_gamma(double x);

/// ln Gamma(x) for x > 0. Finite for every finite positive x.
double log_gamma(double x);

/// Lower incomplete gamma  gamma(t, alpha) = int_0^t u^(alpha-1) e^-u du.
///
/// Uses the alternating power series for t <= 20 and the complement of a
/// continued-fraction upper tail above that. Throws DomainError for t < 0
/// or alpha <= 0.
double lower_incomplete_gamma(double t, double alpha);

/// Generalized binomial coefficient C(alpha, k) by the product recurrence
/// C(alpha,k) = C(alpha,k-1) * (alpha-k+1)/k. No gamma evaluations, so it
/// stays finite for any k.
double generalized_binomial(double alpha, std::size_t k);

}  // namespace fracquad::special
