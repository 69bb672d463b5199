// Copyright 2026 The fracquad Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

/// Reference values for fractional integrals and derivatives: closed forms
/// for a few integrands and a slow adaptive quadrature of the RL integral.
namespace fracquad::oracle {

/// I^alpha[c](t) = c t^alpha / Gamma(alpha + 1).
double exact_integral_const(double t, double alpha, double c = 1.0);

/// I^alpha[e^t](t) = e^t gamma(t, alpha) / Gamma(alpha).
double exact_integral_exp(double t, double alpha);

/// I^alpha[t^q](t) = Gamma(q+1) / Gamma(q+1+alpha) t^(q+alpha).
double exact_integral_monomial(double t, double alpha, double q);

/// RL derivative of t^q: Gamma(q+1) / Gamma(q+1-alpha) t^(q-alpha).
double exact_derivative_monomial(double t, double alpha, double q);

/// RL derivative of e^t for 0 < alpha < 1:
/// t^-alpha / Gamma(1-alpha) + e^t gamma(t, 1-alpha) / Gamma(1-alpha).
double exact_derivative_exp(double t, double alpha);

/// Fourier-sense derivative of sin(omega0 t): |omega0|^alpha sin(omega0 t + pi alpha / 2).
/// Grid-based schemes started at t = 0 only approach it for large t.
double exact_derivative_sin(double t, double omega0, double alpha);

/// (1/Gamma(alpha)) int_0^t f(s) (t-s)^(alpha-1) ds for alpha in (0, 1).
///
/// Substitutes u = (t-s)^alpha, which turns the weakly singular kernel into
/// a constant, then runs globally adaptive Gauss-Kronrod (7/15) until the
/// summed error estimate is below `tol`. Throws ToleranceNotMet after 2^20
/// integrand evaluations.
double brute_force_rl(const std::function<double(double)>& f, double t, double alpha,
                      double tol = 1e-12);

}  // namespace fracquad::oracle
