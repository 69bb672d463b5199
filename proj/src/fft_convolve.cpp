// Copyright 2026 The fracquad Authors
// SPDX-License-Identifier: Apache-2.0

#include "fft_convolve.hpp"

#include <fftw3.h>

#include <algorithm>
#include <complex>
#include <memory>
#include <mutex>

namespace fracquad::detail {
namespace {

// The FFTW planner is not reentrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void* p) const { fftw_free(p); }
};

template <typename T>
using FftwBuffer = std::unique_ptr<T[], FftwFree>;

template <typename T>
FftwBuffer<T> allocate(std::size_t n) {
  return FftwBuffer<T>(static_cast<T*>(fftw_malloc(sizeof(T) * n)));
}

class Plan {
 public:
  explicit Plan(fftw_plan p) : plan_(p) {}
  ~Plan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;
  void execute() const { fftw_execute(plan_); }

 private:
  fftw_plan plan_;
};

std::size_t next_pow2(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

}  // namespace

std::vector<double> fft_convolve(std::span<const double> a, std::span<const double> b,
                                 std::size_t count) {
  std::vector<double> out(count, 0.0);
  if (a.empty() || b.empty() || count == 0) return out;
  const std::size_t size = next_pow2(a.size() + b.size() - 1);
  const std::size_t bins = size / 2 + 1;

  auto real_a = allocate<double>(size);
  auto real_b = allocate<double>(size);
  auto freq_a = allocate<fftw_complex>(bins);
  auto freq_b = allocate<fftw_complex>(bins);

  std::unique_ptr<Plan> fwd_a, fwd_b, inv;
  {
    std::lock_guard lock(planner_mutex());
    const int n = static_cast<int>(size);
    fwd_a = std::make_unique<Plan>(
        fftw_plan_dft_r2c_1d(n, real_a.get(), freq_a.get(), FFTW_ESTIMATE));
    fwd_b = std::make_unique<Plan>(
        fftw_plan_dft_r2c_1d(n, real_b.get(), freq_b.get(), FFTW_ESTIMATE));
    inv = std::make_unique<Plan>(
        fftw_plan_dft_c2r_1d(n, freq_a.get(), real_a.get(), FFTW_ESTIMATE));
  }

  std::fill(real_a.get(), real_a.get() + size, 0.0);
  std::fill(real_b.get(), real_b.get() + size, 0.0);
  std::copy(a.begin(), a.end(), real_a.get());
  std::copy(b.begin(), b.end(), real_b.get());
  fwd_a->execute();
  fwd_b->execute();
  for (std::size_t k = 0; k < bins; ++k) {
    const std::complex<double> x(freq_a[k][0], freq_a[k][1]);
    const std::complex<double> y(freq_b[k][0], freq_b[k][1]);
    const std::complex<double> z = x * y;
    freq_a[k][0] = z.real();
    freq_a[k][1] = z.imag();
  }
  inv->execute();
  const double norm = 1.0 / static_cast<double>(size);
  const std::size_t valid = std::min(count, a.size() + b.size() - 1);
  for (std::size_t i = 0; i < valid; ++i) out[i] = real_a[i] * norm;
  return out;
}

}  // namespace fracquad::detail
