// Copyright 2026 The fracquad Authors
// SPDX-License-Identifier: Apache-2.0

#include "fracquad/quadrature.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <string>

#include "dense_solve.hpp"
#include "fft_convolve.hpp"
#include "fracquad/errors.hpp"
#include "fracquad/special_fn.hpp"
#include "parallel.hpp"

namespace fracquad {
namespace {

constexpr std::size_t kCompensateAbove = 10000;

std::atomic<unsigned>& thread_cap() {
  static std::atomic<unsigned> cap = [] {
    const char* env = std::getenv("FRACQUAD_THREADS");
    if (env == nullptr || *env == '\0') return 1u;
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    return (end != env && *end == '\0') ? static_cast<unsigned>(v) : 1u;
  }();
  return cap;
}

void check_compatible(const SampledSignal& signal, const WeightSequence& weights) {
  const double dt = signal.grid().dt();
  if (std::fabs(weights.dt() - dt) > 1e-12 * dt) {
    throw GridMismatchError("weights built for dt = " + std::to_string(weights.dt()) +
                            ", signal has dt = " + std::to_string(dt));
  }
  if (weights.size() + weights.lag() < signal.size()) {
    throw LengthError("weight sequence shorter than signal");
  }
}

// sum_{k=lo}^{m} f_k c_{m-k}, increasing k.
double causal_dot(std::span<const double> f, std::span<const double> c, std::size_t m,
                  std::size_t lo, bool compensated) {
  if (compensated) {
    detail::CompensatedSum acc;
    for (std::size_t k = lo; k <= m; ++k) acc.add(f[k] * c[m - k]);
    return acc.value();
  }
  double acc = 0.0;
  for (std::size_t k = lo; k <= m; ++k) acc += f[k] * c[m - k];
  return acc;
}

// Shared by frac_integral (direct) and short_memory_integral so both take
// the same summation path.
std::vector<double> truncated_convolution(const SampledSignal& signal,
                                          const WeightSequence& weights, std::size_t memory) {
  const std::size_t n = signal.size();
  const std::size_t lag = weights.lag();
  const bool compensated = n > kCompensateAbove;
  const auto f = signal.values();
  const auto c = weights.values();
  std::vector<double> out(n, 0.0);
  detail::parallel_for(n, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      if (i < lag) continue;
      const std::size_t m = i - lag;
      const std::size_t lo = (m + 1 > memory) ? m + 1 - memory : 0;
      out[i] = causal_dot(f, c, m, lo, compensated);
    }
  });
  return out;
}

// int_0^L u^m (d - u)^(alpha - 1) du for d >= L > 0.
double panel_moment(int m, double d, double span_len, double alpha) {
  if (d <= 4.0 * span_len) {
    // u^m = (d - (d - u))^m, each power of (d - u) integrates exactly.
    double sum = 0.0;
    double binom = 1.0;
    for (int i = 0; i <= m; ++i) {
      const double e = i + alpha;
      const double far = d - span_len;
      const double piece = (std::pow(d, e) - (far > 0.0 ? std::pow(far, e) : 0.0)) / e;
      sum += binom * std::pow(d, m - i) * ((i % 2 == 0) ? piece : -piece);
      binom = binom * (m - i) / (i + 1);
    }
    return sum;
  }
  // Kernel is smooth on the panel: (d-u)^(a-1) = d^(a-1) sum_j b_j (u/d)^j,
  // b_j = (1-a)_j / j!. Ratio span_len/d <= 1/4.
  const double ratio = span_len / d;
  double b = 1.0;
  double power = std::pow(span_len, m + 1);
  double sum = power / (m + 1);
  for (int j = 1; j < 200; ++j) {
    b *= (j - alpha) / j;
    power *= ratio;
    const double term = b * power / (m + j + 1);
    sum += term;
    if (b == 0.0 || std::fabs(term) < 1e-17 * std::fabs(sum)) break;
  }
  return std::pow(d, alpha - 1.0) * sum;
}

// Lagrange basis on nodes 0..order in monomial coefficients.
using Basis = std::array<std::array<double, 3>, 3>;
constexpr Basis kLinearBasis = {{{1.0, -1.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 0.0}}};
constexpr Basis kQuadraticBasis = {
    {{1.0, -1.5, 0.5}, {0.0, 2.0, -1.0}, {0.0, -0.5, 0.5}}};

// Panel weights for nodes 0..order, integrating u over [from, to] of the
// panel with the output node at distance d steps from the panel start.
std::array<double, 3> panel_weights(const Basis& basis, int order, double d, double from,
                                    double to, double alpha) {
  std::array<double, 3> moments{};
  for (int m = 0; m <= order; ++m) {
    moments[m] = panel_moment(m, d, to, alpha) - (from > 0.0 ? panel_moment(m, d, from, alpha) : 0.0);
  }
  std::array<double, 3> w{};
  for (int j = 0; j <= order; ++j) {
    for (int m = 0; m <= order; ++m) w[j] += basis[j][m] * moments[m];
  }
  return w;
}

}  // namespace

void set_max_threads(unsigned count) { thread_cap().store(count); }
unsigned max_threads() { return thread_cap().load(); }

SampledSignal frac_integral(const SampledSignal& signal, const WeightSequence& weights,
                            ConvolutionMethod method) {
  check_compatible(signal, weights);
  const std::size_t n = signal.size();
  if (method == ConvolutionMethod::kDirect) {
    return SampledSignal(signal.grid(), truncated_convolution(signal, weights, n));
  }
  const std::size_t lag = weights.lag();
  std::vector<double> out(n, 0.0);
  if (n > lag) {
    const auto conv = detail::fft_convolve(signal.values(), weights.values().first(n - lag),
                                           n - lag);
    for (std::size_t i = lag; i < n; ++i) out[i] = conv[i - lag];
  }
  return SampledSignal(signal.grid(), std::move(out));
}

SampledSignal frac_integral_corrected(const SampledSignal& signal, const WeightSequence& weights,
                                      int s, ConvolutionMethod method) {
  if (s < 0 || s > 3) throw DomainError("starting weights: degree must be in [0, 3]");
  const SampledSignal plain = frac_integral(signal, weights, method);
  const std::size_t n = signal.size();
  const auto dim = static_cast<std::size_t>(s) + 1;
  if (n < dim) return plain;

  // Plain quadrature of the monomials k^q, dt-free.
  const double scale = std::pow(signal.grid().dt(), weights.alpha());
  std::vector<std::vector<double>> sums(dim);
  for (std::size_t q = 0; q < dim; ++q) {
    std::vector<double> mono(n);
    for (std::size_t k = 0; k < n; ++k) mono[k] = std::pow(static_cast<double>(k), q);
    const auto conv = frac_integral(SampledSignal(signal.grid(), std::move(mono)), weights, method);
    sums[q].resize(n);
    for (std::size_t k = 0; k < n; ++k) sums[q][k] = conv[k] / scale;
  }

  std::vector<double> out(plain.values().begin(), plain.values().end());
  std::array<double, 4> row_sums{};
  for (std::size_t i = dim - 1; i < n; ++i) {
    for (std::size_t q = 0; q < dim; ++q) row_sums[q] = sums[q][i];
    const auto mu = starting_weights_from_sums(weights.alpha(), s, i,
                                               std::span<const double>(row_sums).first(dim));
    double corr = 0.0;
    for (std::size_t j = 0; j < dim; ++j) corr += mu[j] * signal[j];
    out[i] += scale * corr;
  }
  return SampledSignal(signal.grid(), std::move(out));
}

SampledSignal frac_trapezoid(const SampledSignal& signal, double alpha, ConvolutionMethod method) {
  const std::size_t n = signal.size();
  if (n < 2) throw LengthError("frac_trapezoid: need at least two nodes");
  std::vector<double> mid(n, 0.0);
  for (std::size_t k = 0; k + 1 < n; ++k) mid[k] = 0.5 * (signal[k] + signal[k + 1]);
  mid[n - 1] = signal[n - 1];  // never reached by the panel sum
  const WeightSequence c = nc0_weights(alpha, signal.grid().dt(), n);
  return frac_integral(SampledSignal(signal.grid(), std::move(mid)), c, method);
}

SampledSignal frac_newton_cotes(const SampledSignal& signal, double alpha, int p) {
  if (p != 2 && p != 3) throw DomainError("frac_newton_cotes: p must be 2 or 3");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("frac_newton_cotes: alpha must be positive");
  }
  const std::size_t n = signal.size();
  const auto order = static_cast<std::size_t>(p - 1);
  if ((n - 1) % order != 0) {
    throw AlignmentError("frac_newton_cotes: " + std::to_string(n) +
                         " nodes do not tile into panels of " + std::to_string(order) +
                         " steps");
  }
  const double h = signal.grid().dt();
  const double prefactor =
      (alpha <= special::kGammaMaxArg)
          ? std::pow(h, alpha) / special::gamma(alpha)
          : std::exp(alpha * std::log(h) - special::log_gamma(alpha));
  const Basis& basis = (p == 2) ? kLinearBasis : kQuadraticBasis;
  const int ord = static_cast<int>(order);
  const double span_len = static_cast<double>(order);

  // Full-panel weights depend only on d = output node - panel start.
  std::vector<std::array<double, 3>> table(n);
  for (std::size_t d = order; d < n; ++d) {
    table[d] = panel_weights(basis, ord, static_cast<double>(d), 0.0, span_len, alpha);
  }
  // p = 3 closing step: last step of the quadratic panel ending at n (d = 2),
  // or the first step of panel [0, 2] for n = 1.
  const auto tail = panel_weights(basis, ord, 2.0, 1.0, 2.0, alpha);
  const auto head = panel_weights(basis, ord, 1.0, 0.0, 1.0, alpha);

  const auto f = signal.values();
  std::vector<double> out(n, 0.0);
  detail::parallel_for(n, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      double acc = 0.0;
      const std::size_t full_end = (i % order == 0) ? i : i - 1;
      for (std::size_t a = 0; a + order <= full_end; a += order) {
        const auto& w = table[i - a];
        for (std::size_t j = 0; j <= order; ++j) acc += w[j] * f[a + j];
      }
      if (full_end != i) {
        if (i >= 2) {
          for (std::size_t j = 0; j < 3; ++j) acc += tail[j] * f[i - 2 + j];
        } else if (n >= 3) {
          for (std::size_t j = 0; j < 3; ++j) acc += head[j] * f[j];
        }
      }
      out[i] = prefactor * acc;
    }
  }, 64);
  return SampledSignal(signal.grid(), std::move(out));
}

SampledSignal short_memory_integral(const SampledSignal& signal, const WeightSequence& weights,
                                    std::size_t memory_length) {
  if (memory_length == 0) throw DomainError("short_memory_integral: memory length must be >= 1");
  check_compatible(signal, weights);
  return SampledSignal(signal.grid(), truncated_convolution(signal, weights, memory_length));
}

}  // namespace fracquad
