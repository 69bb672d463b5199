// Copyright 2026 The fracquad Authors
// SPDX-License-Identifier: Apache-2.0

#include "fracquad/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "fracquad/errors.hpp"
#include "fracquad/special_fn.hpp"

namespace fracquad::oracle {
namespace {

void require_time(double t) {
  if (std::isnan(t) || t < 0.0) throw DomainError("oracle: t must be >= 0");
}

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1].
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

template <typename F>
Panel gauss_kronrod(const F& g, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = g(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const double pair = g(center - dx) + g(center + dx);
    kronrod += kWgk[i] * pair;
    if (i % 2 == 1) gauss += kWg[i / 2] * pair;
  }
  return {a, b, kronrod * half, std::fabs((kronrod - gauss) * half)};
}

}  // namespace

double exact_integral_const(double t, double alpha, double c) {
  require_time(t);
  if (t == 0.0) return 0.0;
  return c * std::pow(t, alpha) * special::reciprocal_gamma(alpha + 1.0);
}

double exact_integral_exp(double t, double alpha) {
  require_time(t);
  if (t == 0.0) return 0.0;
  return std::exp(t) * special::lower_incomplete_gamma(t, alpha) * special::reciprocal_gamma(alpha);
}

double exact_integral_monomial(double t, double alpha, double q) {
  require_time(t);
  if (q < 0.0) throw DomainError("exact_integral_monomial: q must be >= 0");
  if (t == 0.0) return 0.0;
  return special::gamma(q + 1.0) * special::reciprocal_gamma(q + 1.0 + alpha) *
         std::pow(t, q + alpha);
}

double exact_derivative_monomial(double t, double alpha, double q) {
  require_time(t);
  if (q < 0.0) throw DomainError("exact_derivative_monomial: q must be >= 0");
  const double coeff = special::gamma(q + 1.0) * special::reciprocal_gamma(q + 1.0 - alpha);
  if (coeff == 0.0) return 0.0;
  return coeff * std::pow(t, q - alpha);
}

double exact_derivative_exp(double t, double alpha) {
  require_time(t);
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("exact_derivative_exp: alpha must be in (0, 1)");
  }
  const double beta = 1.0 - alpha;
  return (std::pow(t, -alpha) + std::exp(t) * special::lower_incomplete_gamma(t, beta)) /
         special::gamma(beta);
}

double exact_derivative_sin(double t, double omega0, double alpha) {
  return std::pow(std::fabs(omega0), alpha) * std::sin(omega0 * t + 0.5 * std::numbers::pi * alpha);
}

double brute_force_rl(const std::function<double(double)>& f, double t, double alpha, double tol) {
  require_time(t);
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("brute_force_rl: alpha must be in (0, 1)");
  if (!(tol >= 1e-12)) throw DomainError("brute_force_rl: tol must be >= 1e-12");
  if (t == 0.0) return 0.0;

  const double inv_alpha = 1.0 / alpha;
  const double scale = special::reciprocal_gamma(alpha) / alpha;
  const auto g = [&](double u) { return f(t - std::pow(u, inv_alpha)) * scale; };

  constexpr std::size_t kBudget = std::size_t{1} << 20;
  constexpr std::size_t kPerPanel = 15;
  std::vector<Panel> heap{gauss_kronrod(g, 0.0, std::pow(t, alpha))};
  double total = heap.front().value;
  double error = heap.front().error;
  std::size_t evaluations = kPerPanel;

  const auto exact_total = [&heap] {
    double sum = 0.0;
    for (const Panel& p : heap) sum += p.value;
    return sum;
  };

  while (true) {
    const double floor = 4.0 * std::numeric_limits<double>::epsilon() * std::fabs(total);
    if (error <= tol || error <= floor) return exact_total();
    if (evaluations + 2 * kPerPanel > kBudget) {
      throw ToleranceNotMet("brute_force_rl: evaluation budget exhausted");
    }
    std::pop_heap(heap.begin(), heap.end());
    const Panel worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = gauss_kronrod(g, worst.a, mid);
    const Panel right = gauss_kronrod(g, mid, worst.b);
    evaluations += 2 * kPerPanel;
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end());
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end());
  }
}

}  // namespace fracquad::oracle
