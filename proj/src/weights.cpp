// Copyright 2026 The fracquad Authors
// SPDX-License-Identifier: Apache-2.0

#include "fracquad/weights.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "dense_solve.hpp"
#include "fracquad/errors.hpp"
#include "fracquad/special_fn.hpp"

namespace fracquad {
namespace {

void require_step(double dt, const char* who) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw DomainError(std::string(who) + ": dt must be positive and finite");
  }
}

void require_count(std::size_t n, const char* who) {
  if (n == 0) throw DomainError(std::string(who) + ": need at least one weight");
}

// dt^alpha / Gamma(alpha + 1), routed through logs when Gamma would overflow.
double nc0_prefactor(double alpha, double dt) {
  if (alpha + 1.0 <= special::kGammaMaxArg) {
    return std::pow(dt, alpha) / special::gamma(alpha + 1.0);
  }
  return std::exp(alpha * std::log(dt) - special::log_gamma(alpha + 1.0));
}

std::vector<double> trimmed(std::span<const double> p) {
  std::vector<double> out(p.begin(), p.end());
  while (!out.empty() && out.back() == 0.0) out.pop_back();
  return out;
}

std::vector<double> multiply(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<double> derivative(std::span<const double> a) {
  if (a.size() <= 1) return {0.0};
  std::vector<double> out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = static_cast<double>(i) * a[i];
  return out;
}

}  // namespace

std::string_view to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::kGL:
      return "gl";
    case Scheme::kNC0:
      return "nc0";
    case Scheme::kFlmmTrap:
      return "flmm-trap";
    case Scheme::kFlmm:
      return "flmm";
  }
  return "unknown";
}

WeightSequence::WeightSequence(Scheme scheme, double alpha, double dt, std::vector<double> values)
    : scheme_(scheme), alpha_(alpha), dt_(dt), values_(std::move(values)) {}

WeightSequence gl_weights(double alpha, double dt, std::size_t n) {
  require_step(dt, "gl_weights");
  require_count(n, "gl_weights");
  if (alpha == 0.0 || !std::isfinite(alpha)) {
    throw DomainError("gl_weights: order must be finite and nonzero");
  }
  std::vector<double> w(n);
  w[0] = std::pow(dt, alpha);
  for (std::size_t k = 1; k < n; ++k) {
    const double kd = static_cast<double>(k);
    w[k] = w[k - 1] * ((kd - 1.0 + alpha) / kd);
  }
  return WeightSequence(Scheme::kGL, alpha, dt, std::move(w));
}

WeightSequence nc0_weights(double alpha, double dt, std::size_t n) {
  require_step(dt, "nc0_weights");
  require_count(n, "nc0_weights");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("nc0_weights: alpha must be positive");
  }
  const double pre = nc0_prefactor(alpha, dt);
  std::vector<double> c(n);
  c[0] = pre;
  for (std::size_t k = 1; k < n; ++k) {
    const double kd = static_cast<double>(k);
    // (k+1)^a - k^a = k^a ((1 + 1/k)^a - 1)
    c[k] = pre * std::pow(kd, alpha) * std::expm1(alpha * std::log1p(1.0 / kd));
  }
  return WeightSequence(Scheme::kNC0, alpha, dt, std::move(c));
}

WeightSequence flmm_weights(std::span<const double> sigma, std::span<const double> rho,
                            double alpha, double dt, std::size_t n, Scheme tag) {
  require_step(dt, "flmm_weights");
  require_count(n, "flmm_weights");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("flmm_weights: alpha must be positive");
  }
  const std::vector<double> s = trimmed(sigma);
  const std::vector<double> r = trimmed(rho);
  if (r.empty()) throw DegenerateMethodError("flmm_weights: rho is the zero polynomial");
  if (s.empty()) throw DegenerateMethodError("flmm_weights: sigma is the zero polynomial");

  // z -> 1/z and clear denominators: P(z) = z^d sigma(1/z), Q(z) = z^d rho(1/z).
  const std::size_t degree = std::max(s.size(), r.size()) - 1;
  std::vector<double> p(degree + 1, 0.0);
  std::vector<double> q(degree + 1, 0.0);
  for (std::size_t i = 0; i < s.size(); ++i) p[degree - i] = s[i];
  for (std::size_t i = 0; i < r.size(); ++i) q[degree - i] = r[i];
  if (q[0] == 0.0) {
    throw DegenerateMethodError("flmm_weights: rho(1/z) vanishes at z = 0");
  }
  const double u0 = p[0] / q[0];
  if (!(u0 > 0.0)) {
    throw DegenerateMethodError(
        "flmm_weights: generator is not positive at z = 0 (explicit method?)");
  }

  // v = (P/Q)^alpha satisfies P Q v' = alpha (P' Q - P Q') v. Comparing
  // coefficients gives a recurrence of length 2d; with Q = 1 this is Miller's.
  const std::vector<double> pq = multiply(p, q);
  const std::vector<double> dp = derivative(p);
  const std::vector<double> dq = derivative(q);
  std::vector<double> rhs = multiply(dp, q);
  const std::vector<double> pdq = multiply(p, dq);
  rhs.resize(std::max(rhs.size(), pdq.size()), 0.0);
  for (std::size_t i = 0; i < pdq.size(); ++i) rhs[i] -= pdq[i];
  for (double& v : rhs) v *= alpha;

  std::vector<double> v(n);
  v[0] = std::pow(u0, alpha);
  for (std::size_t m = 1; m < n; ++m) {
    double acc = 0.0;
    for (std::size_t j = 0; j < rhs.size() && j < m; ++j) acc += rhs[j] * v[m - 1 - j];
    for (std::size_t i = 1; i < pq.size() && i <= m; ++i) {
      acc -= pq[i] * static_cast<double>(m - i) * v[m - i];
    }
    v[m] = acc / (pq[0] * static_cast<double>(m));
  }
  const double scale = std::pow(dt, alpha);
  for (double& x : v) x *= scale;
  return WeightSequence(tag, alpha, dt, std::move(v));
}

WeightSequence flmm_trap_weights(double alpha, double dt, std::size_t n) {
  constexpr std::array<double, 2> sigma = {0.5, 0.5};
  constexpr std::array<double, 2> rho = {-1.0, 1.0};
  return flmm_weights(sigma, rho, alpha, dt, n, Scheme::kFlmmTrap);
}

WeightSequence make_weights(Scheme scheme, double alpha, double dt, std::size_t n) {
  switch (scheme) {
    case Scheme::kGL:
      return gl_weights(alpha, dt, n);
    case Scheme::kNC0:
      return nc0_weights(alpha, dt, n);
    case Scheme::kFlmmTrap:
      return flmm_trap_weights(alpha, dt, n);
    case Scheme::kFlmm:
      break;
  }
  throw DomainError("make_weights: generic FLMM needs explicit (rho, sigma)");
}

std::vector<double> starting_weights_from_sums(double alpha, int s, std::size_t n,
                                               std::span<const double> monomial_sums) {
  if (s < 0 || s > 3) throw DomainError("starting_weights: degree must be in [0, 3]");
  if (n < static_cast<std::size_t>(s)) {
    throw DomainError("starting_weights: node index must be >= degree");
  }
  const auto dim = static_cast<std::size_t>(s) + 1;
  if (monomial_sums.size() < dim) throw LengthError("starting_weights: missing monomial sums");

  const double nd = static_cast<double>(n);
  std::vector<double> a(dim * dim);
  std::vector<double> b(dim);
  for (std::size_t q = 0; q < dim; ++q) {
    for (std::size_t j = 0; j < dim; ++j) {
      a[q * dim + j] = std::pow(static_cast<double>(j), static_cast<double>(q));  // 0^0 = 1
    }
    const double qd = static_cast<double>(q);
    // Exact fractional integral of t^q in dt-free units.
    const double exact = special::gamma(qd + 1.0) * special::reciprocal_gamma(qd + 1.0 + alpha) *
                         std::pow(nd, qd + alpha);
    b[q] = exact - monomial_sums[q];
  }
  return detail::dense_solve(std::move(a), std::move(b));
}

std::vector<double> starting_weights(const WeightSequence& weights, int s, std::size_t n) {
  const std::size_t lag = weights.lag();
  if (n >= weights.size() + lag) {
    throw LengthError("starting_weights: node beyond weight sequence");
  }
  const double unscale = std::pow(weights.dt(), -weights.alpha());
  std::array<double, 4> sums{};
  if (n >= lag) {
    const std::size_t m = n - lag;
    for (int q = 0; q <= s && q < 4; ++q) {
      detail::CompensatedSum acc;
      for (std::size_t k = 0; k <= m; ++k) {
        acc.add(weights[m - k] * unscale * std::pow(static_cast<double>(k), q));
      }
      sums[static_cast<std::size_t>(q)] = acc.value();
    }
  }
  return starting_weights_from_sums(weights.alpha(), s, n, sums);
}

StartingWeights starting_weight_table(const WeightSequence& weights, int s, std::size_t count) {
  StartingWeights table;
  table.s = s;
  table.rows.resize(count);
  for (std::size_t n = static_cast<std::size_t>(std::max(s, 0)); n < count; ++n) {
    table.rows[n] = starting_weights(weights, s, n);
  }
  return table;
}

namespace series {

std::vector<double> divide(std::span<const double> num, std::span<const double> den,
                           std::size_t n) {
  if (den.empty() || den[0] == 0.0) {
    throw DomainError("series::divide: denominator must have a nonzero constant term");
  }
  std::vector<double> out(n, 0.0);
  for (std::size_t m = 0; m < n; ++m) {
    double acc = m < num.size() ? num[m] : 0.0;
    for (std::size_t k = 1; k < den.size() && k <= m; ++k) acc -= den[k] * out[m - k];
    out[m] = acc / den[0];
  }
  return out;
}

std::vector<double> power(std::span<const double> u, double alpha, std::size_t n) {
  if (u.empty() || !(u[0] > 0.0)) {
    throw DegenerateMethodError("series::power: leading coefficient must be positive");
  }
  std::vector<double> v(n, 0.0);
  if (n == 0) return v;
  v[0] = std::pow(u[0], alpha);
  for (std::size_t m = 1; m < n; ++m) {
    const double md = static_cast<double>(m);
    double acc = 0.0;
    for (std::size_t k = 1; k <= m && k < u.size(); ++k) {
      const double kd = static_cast<double>(k);
      acc += (kd * alpha - (md - kd)) * u[k] * v[m - k];
    }
    v[m] = acc / (md * u[0]);
  }
  return v;
}

}  // namespace series
}  // namespace fracquad
