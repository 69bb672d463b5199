// Copyright 2026 The fracquad Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

#include "fracquad/grid.hpp"
#include "fracquad/weights.hpp"

namespace fracquad {

/// How the causal convolution is evaluated.
enum class ConvolutionMethod { kDirect, kFft };

/// Left-sided Riemann-Liouville integral by discrete causal convolution:
/// out[n] = sum_k f_k c_{n-k} (GL / FLMM), or sum_{k<n} f_k c_{(n-1)-k} with
/// out[0] = 0 for NC0.
///
/// The direct path sums in increasing k and switches to compensated
/// summation above 10^4 nodes. The FFT path zero-pads to a power of two
/// >= 2N-1.
SampledSignal frac_integral(const SampledSignal& signal, const WeightSequence& weights,
                            ConvolutionMethod method = ConvolutionMethod::kDirect);

/// frac_integral plus starting-weight corrections of degree s attached to
/// nodes 0..s. Nodes n < s are left uncorrected.
SampledSignal frac_integral_corrected(const SampledSignal& signal, const WeightSequence& weights,
                                      int s,
                                      ConvolutionMethod method = ConvolutionMethod::kDirect);

/// Fractional composite trapezoid rule: NC0 weights applied to the panel
/// averages (f_k + f_{k+1}) / 2.
SampledSignal frac_trapezoid(const SampledSignal& signal, double alpha,
                             ConvolutionMethod method = ConvolutionMethod::kDirect);

/// Order-p fractional Newton-Cotes rule (p = 2: linear, p = 3: quadratic
/// panels spanning two grid steps). Requires (size - 1) divisible by p - 1.
/// For p = 3 the odd nodes close with a single step under the quadratic of
/// the preceding panel pair, so every node is exact on quadratics.
SampledSignal frac_newton_cotes(const SampledSignal& signal, double alpha, int p);

/// Convolution truncated to the last `memory_length` weights. With
/// memory_length >= size this follows the same summation path as the direct
/// frac_integral and gives identical bits.
SampledSignal short_memory_integral(const SampledSignal& signal, const WeightSequence& weights,
                                    std::size_t memory_length);

/// Cap on worker threads for direct convolution (0 = hardware concurrency).
/// Defaults to the FRACQUAD_THREADS environment variable.
void set_max_threads(unsigned count);
unsigned max_threads();

}  // namespace fracquad
