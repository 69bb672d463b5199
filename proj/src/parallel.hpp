// Copyright 2026 The fracquad Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

#include "fracquad/quadrature.hpp"

namespace fracquad::detail {

/// Runs body(begin, end) over contiguous chunks of [0, count). Each index is
/// handled by exactly one call, so results that depend only on the index
/// are identical for any thread count.
template <typename Body>
void parallel_for(std::size_t count, Body&& body, std::size_t min_chunk = 256) {
  unsigned threads = max_threads();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t chunks =
      std::min<std::size_t>(threads, std::max<std::size_t>(1, count / min_chunk));
  if (chunks <= 1) {
    body(std::size_t{0}, count);
    return;
  }
  std::vector<std::jthread> workers;
  workers.reserve(chunks - 1);
  const std::size_t step = (count + chunks - 1) / chunks;
  for (std::size_t c = 1; c < chunks; ++c) {
    const std::size_t begin = c * step;
    const std::size_t end = std::min(count, begin + step);
    if (begin < end) workers.emplace_back([&body, begin, end] { body(begin, end); });
  }
  body(std::size_t{0}, std::min(count, step));
}

}  // namespace fracquad::detail
