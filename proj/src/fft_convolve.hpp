// Copyright 2026 The fracquad Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

namespace fracquad::detail {

/// First `count` entries of the linear convolution a * b, via real FFTs.
std::vector<double> fft_convolve(std::span<const double> a, std::span<const double> b,
                                 std::size_t count);

}  // namespace fracquad::detail
