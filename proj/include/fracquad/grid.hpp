// Copyright 2026 The fracquad Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace fracquad {

/// Uniform mesh t_i = i * dt, i = 0..size-1, anchored at the origin.
class UniformGrid {
 public:
  UniformGrid(double dt, std::size_t size);

  /// Grid covering [0, t_end] with `steps` intervals (steps + 1 nodes).
  static UniformGrid over(double t_end, std::size_t steps);

  double dt() const { return dt_; }
  std::size_t size() const { return size_; }
  double node(std::size_t i) const { return static_cast<double>(i) * dt_; }
  double t_end() const { return node(size_ - 1); }

 private:
  double dt_;
  std::size_t size_;
};

/// Real samples of a function on a UniformGrid.
class SampledSignal {
 public:
  SampledSignal(UniformGrid grid, std::vector<double> values);

  /// Samples f at every grid node.
  static SampledSignal sample(const UniformGrid& grid, const std::function<double(double)>& f);

  const UniformGrid& grid() const { return grid_; }
  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

  /// Same grid, values reversed in time.
  SampledSignal reversed() const;

 private:
  UniformGrid grid_;
  std::vector<double> values_;
};

}  // namespace fracquad
