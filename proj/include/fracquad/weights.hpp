// Copyright 2026 The fracquad Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace fracquad {

/// Weight generators for discrete convolution quadrature.
///
/// kGL        (1 - z)^(-alpha): fractional implicit Euler / truncated
///            Grunwald-Letnikov sum. Negative alpha gives derivative weights.
/// kNC0       zero-order fractional Newton-Cotes, panel-based indexing.
/// kFlmmTrap  ((1 + z) / (2 (1 - z)))^alpha: fractional trapezoidal FLMM.
/// kFlmm      any other (rho, sigma) pair fed to flmm_weights().
enum class Scheme { kGL, kNC0, kFlmmTrap, kFlmm };

std::string_view to_string(Scheme scheme);

/// Convolution weights c_k for a (scheme, alpha, dt) triple, already scaled
/// by dt^alpha. Immutable after construction.
///
/// alpha is the integration order; a negative alpha (GL only) means a
/// derivative of order -alpha.
class WeightSequence {
 public:
  WeightSequence(Scheme scheme, double alpha, double dt, std::vector<double> values);

  Scheme scheme() const { return scheme_; }
  double alpha() const { return alpha_; }
  double dt() const { return dt_; }
  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t k) const { return values_[k]; }

  /// Index offset between output node and weight index: 1 for NC0 (panel
  /// sum c_{(n-1)-k}), 0 for the multistep families (c_{n-k}).
  std::size_t lag() const { return scheme_ == Scheme::kNC0 ? 1 : 0; }

 private:
  Scheme scheme_;
  double alpha_;
  double dt_;
  std::vector<double> values_;
};

/// Grunwald-Letnikov weights dt^alpha (-1)^k C(-alpha, k), k < n, by the
/// multiplicative recurrence w_k = w_{k-1} (k - 1 + alpha) / k.
WeightSequence gl_weights(double alpha, double dt, std::size_t n);

/// Zero-order Newton-Cotes weights dt^alpha [(k+1)^alpha - k^alpha] / Gamma(alpha+1).
WeightSequence nc0_weights(double alpha, double dt, std::size_t n);

/// Power-series coefficients of (sigma(1/z) / rho(1/z))^alpha times dt^alpha.
///
/// `sigma` and `rho` are the generating polynomials of a linear multistep
/// method, coefficients in ascending powers of zeta. Throws
/// DegenerateMethodError when the generator vanishes (or is negative) at
/// z = 0, which is the case for explicit methods.
WeightSequence flmm_weights(std::span<const double> sigma, std::span<const double> rho,
                            double alpha, double dt, std::size_t n,
                            Scheme tag = Scheme::kFlmm);

/// Fractional trapezoidal weights, i.e. flmm_weights with sigma = (zeta+1)/2,
/// rho = zeta - 1.
WeightSequence flmm_trap_weights(double alpha, double dt, std::size_t n);

/// Dispatch on scheme. kFlmm has no fixed generator and is rejected.
WeightSequence make_weights(Scheme scheme, double alpha, double dt, std::size_t n);

/// Starting-weight corrections mu_{n,0..s} for one grid node, in dt-free
/// units (the corrected rule adds dt^alpha sum_j mu_{nj} f_j). Attached to
/// nodes 0..s. Makes the corrected quadrature exact on t^q, q = 0..s.
std::vector<double> starting_weights(const WeightSequence& weights, int s, std::size_t n);

/// Same as starting_weights() but with the plain quadrature of the
/// monomials already known: monomial_sums[q] = sum of dt-free weights
/// applied to k^q at node n.
std::vector<double> starting_weights_from_sums(double alpha, int s, std::size_t n,
                                               std::span<const double> monomial_sums);

/// Full table of starting weights for nodes 0..count-1. Rows for n < s are
/// empty (no correction).
struct StartingWeights {
  int s = 0;
  std::vector<std::vector<double>> rows;
};

StartingWeights starting_weight_table(const WeightSequence& weights, int s, std::size_t count);

namespace series {

/// First n coefficients of num / den. den[0] must be nonzero.
std::vector<double> divide(std::span<const double> num, std::span<const double> den,
                           std::size_t n);

/// First n coefficients of u^alpha by J.C.P. Miller's recurrence.
/// u[0] must be positive.
std::vector<double> power(std::span<const double> u, double alpha, std::size_t n);

}  // namespace series

}  // namespace fracquad
