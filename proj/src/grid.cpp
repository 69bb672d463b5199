// Copyright 2026 The fracquad Authors
// SPDX-License-Identifier: Apache-2.0

#include "fracquad/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracquad/errors.hpp"

namespace fracquad {

UniformGrid::UniformGrid(double dt, std::size_t size) : dt_(dt), size_(size) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw DomainError("UniformGrid: dt must be positive and finite");
  }
  if (size == 0) {
    throw DomainError("UniformGrid: at least one node required");
  }
}

UniformGrid UniformGrid::over(double t_end, std::size_t steps) {
  if (steps == 0) throw DomainError("UniformGrid::over: steps must be >= 1");
  return UniformGrid(t_end / static_cast<double>(steps), steps + 1);
}

SampledSignal::SampledSignal(UniformGrid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw LengthError("SampledSignal: " + std::to_string(values_.size()) +
                      " samples for a grid of " + std::to_string(grid_.size()) + " nodes");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw DomainError("SampledSignal: non-finite sample at index " + std::to_string(i));
    }
  }
}

SampledSignal SampledSignal::sample(const UniformGrid& grid,
                                    const std::function<double(double)>& f) {
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = f(grid.node(i));
  return SampledSignal(grid, std::move(values));
}

SampledSignal SampledSignal::reversed() const {
  std::vector<double> values(values_.rbegin(), values_.rend());
  return SampledSignal(grid_, std::move(values));
}

}  // namespace fracquad
