// Copyright 2026 The fracquad Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "fracquad/grid.hpp"
#include "fracquad/quadrature.hpp"
#include "fracquad/weights.hpp"

namespace fracquad {

/// Derivative order alpha >= 0 with its integer ceiling n = floor(alpha) + 1,
/// so that n - 1 <= alpha < n.
class DerivativeOrder {
 public:
  explicit DerivativeOrder(double alpha);

  double alpha() const { return alpha_; }
  int integer_order() const { return integer_order_; }

 private:
  double alpha_;
  int integer_order_;
};

enum class Direction { kBackward, kForward };

/// Truncated Grunwald-Letnikov derivative on the grid,
/// out[m] = dt^-alpha sum_k (-1)^k C(alpha, k) f_{m-k}.
///
/// kForward uses f_{m+k} instead, which is the right-sided operator
/// (alpha = 1 gives -f'). Throws DomainError for alpha <= 0.
SampledSignal gl_derivative(const SampledSignal& signal, const DerivativeOrder& order,
                            Direction direction = Direction::kBackward,
                            ConvolutionMethod method = ConvolutionMethod::kDirect);

/// Riemann-Liouville derivative D^n I^(n-alpha): the fractional integral by
/// `scheme`, then an n-th order central difference (second-order one-sided
/// stencils at the ends). alpha = 0 returns the input unchanged.
/// Requires alpha < 2.
SampledSignal rl_derivative_via_integral(const SampledSignal& signal, const DerivativeOrder& order,
                                         Scheme scheme,
                                         ConvolutionMethod method = ConvolutionMethod::kDirect);

}  // namespace fracquad
