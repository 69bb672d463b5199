// Copyright 2026 The fracquad Authors
// SPDX-License-Identifier: Apache-2.0

#include "fracquad/derivative.hpp"

#include <cmath>
#include <vector>

#include "fracquad/errors.hpp"

namespace fracquad {
namespace {

std::vector<double> first_difference(std::span<const double> y, double h) {
  const std::size_t n = y.size();
  std::vector<double> out(n);
  if (n == 2) {
    out[0] = out[1] = (y[1] - y[0]) / h;
    return out;
  }
  out[0] = (-3.0 * y[0] + 4.0 * y[1] - y[2]) / (2.0 * h);
  for (std::size_t i = 1; i + 1 < n; ++i) out[i] = (y[i + 1] - y[i - 1]) / (2.0 * h);
  out[n - 1] = (3.0 * y[n - 1] - 4.0 * y[n - 2] + y[n - 3]) / (2.0 * h);
  return out;
}

std::vector<double> second_difference(std::span<const double> y, double h) {
  const std::size_t n = y.size();
  const double h2 = h * h;
  std::vector<double> out(n);
  for (std::size_t i = 1; i + 1 < n; ++i) out[i] = (y[i + 1] - 2.0 * y[i] + y[i - 1]) / h2;
  if (n >= 4) {
    out[0] = (2.0 * y[0] - 5.0 * y[1] + 4.0 * y[2] - y[3]) / h2;
    out[n - 1] = (2.0 * y[n - 1] - 5.0 * y[n - 2] + 4.0 * y[n - 3] - y[n - 4]) / h2;
  } else {
    out[0] = out[1];
    out[n - 1] = out[n - 2];
  }
  return out;
}

}  // namespace

DerivativeOrder::DerivativeOrder(double alpha) : alpha_(alpha) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw DomainError("DerivativeOrder: alpha must be finite and >= 0");
  }
  integer_order_ = static_cast<int>(std::floor(alpha)) + 1;
}

SampledSignal gl_derivative(const SampledSignal& signal, const DerivativeOrder& order,
                            Direction direction, ConvolutionMethod method) {
  if (!(order.alpha() > 0.0)) {
    throw DomainError("gl_derivative: order must be > 0, integrals belong to frac_integral");
  }
  const WeightSequence w = gl_weights(-order.alpha(), signal.grid().dt(), signal.size());
  if (direction == Direction::kBackward) return frac_integral(signal, w, method);
  return frac_integral(signal.reversed(), w, method).reversed();
}

SampledSignal rl_derivative_via_integral(const SampledSignal& signal, const DerivativeOrder& order,
                                         Scheme scheme, ConvolutionMethod method) {
  const double alpha = order.alpha();
  if (alpha == 0.0) return signal;
  if (alpha >= 2.0) throw DomainError("rl_derivative_via_integral: alpha must be < 2");
  const int n_int = order.integer_order();
  if (signal.size() < static_cast<std::size_t>(n_int) + 1) {
    throw LengthError("rl_derivative_via_integral: signal too short for the difference stencil");
  }
  const double dt = signal.grid().dt();
  const WeightSequence w = make_weights(scheme, n_int - alpha, dt, signal.size());
  const SampledSignal integral = frac_integral(signal, w, method);
  auto values = (n_int == 1) ? first_difference(integral.values(), dt)
                             : second_difference(integral.values(), dt);
  return SampledSignal(signal.grid(), std::move(values));
}

}  // namespace fracquad
