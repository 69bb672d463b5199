// Copyright 2026 The fracquad Authors
// SPDX-License-Identifier: Apache-2.0

// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "fracquad/derivative.hpp"
#include "fracquad/dielectric.hpp"
#include "fracquad/oracle.hpp"
#include "fracquad/quadrature.hpp"
#include "fracquad/weights.hpp"
#include "test_support.hpp"

using namespace fracquad;
namespace ts = fracquad::testing;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string& what) {
  std::printf("criterion %2d: %s  %s\n", id, pass ? "PASS" : "FAIL", what.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

SampledSignal sample(const UniformGrid& g, double (*f)(double)) { return SampledSignal::sample(g, f); }

double one(double) { return 1.0; }
double expo(double t) { return std::exp(t); }
double ident(double t) { return t; }

void criterion1() {
  bool pass = true;
  double worst = 0.0, slowest = 0.0;
  for (double a : {0.25, 0.5, 0.75}) {
    const auto start = std::chrono::steady_clock::now();
    const auto g = UniformGrid::over(10.0, 1500);
    const auto out = frac_integral(sample(g, one), gl_weights(a, g.dt(), g.size()), ConvolutionMethod::kFft);
    slowest = std::max(slowest, seconds_since(start));
    for (std::size_t n = 1; n < g.size(); ++n) {
      if (g.node(n) < 6.0) continue;
      worst = std::max(worst, ts::relative(out[n], oracle::exact_integral_const(g.node(n), a)));
    }
  }
  pass = worst < 1e-3 && slowest < 1.0;
  report(1, pass, "GL on f=1, N=1500, t>=6: max rel err " + fmt("%.3e", worst) + " (< 1e-3), slowest run " +
                      fmt("%.3f", slowest) + " s (< 1 s)");
}

void criterion2() {
  const auto start = std::chrono::steady_clock::now();
  const auto g = UniformGrid::over(10.0, 100000);
  const auto out = frac_integral(sample(g, one), gl_weights(0.5, g.dt(), g.size()), ConvolutionMethod::kFft);
  const double elapsed = seconds_since(start);
  bool finite = true, monotone = true;
  for (std::size_t n = 0; n < g.size(); ++n) {
    finite = finite && std::isfinite(out[n]);
    if (n > 0) monotone = monotone && out[n] >= out[n - 1];
  }
  const auto rel_at = [&](double t) {
    const auto n = static_cast<std::size_t>(std::llround(t / g.dt()));
    return ts::relative(out[n], oracle::exact_integral_const(g.node(n), 0.5));
  };
  const double e4 = rel_at(4.0), e9 = rel_at(9.0);
  report(2, finite && monotone && e9 < e4 && elapsed < 5.0,
         std::string("GL on f=1, N=1e5: finite ") + (finite ? "yes" : "no") + ", monotone " +
             (monotone ? "yes" : "no") + ", rel err t=9 " + fmt("%.3e", e9) + " < t=4 " + fmt("%.3e", e4) +
             ", " + fmt("%.3f", elapsed) + " s (< 5 s)");
}

void criterion3() {
  const auto g = UniformGrid::over(10.0, 1500);
  const auto f = sample(g, one);
  const auto gl = frac_integral(f, gl_weights(0.5, g.dt(), g.size()));
  const auto nc0 = frac_integral(f, nc0_weights(0.5, g.dt(), g.size()));
  double gap = 0.0, err_gl = 0.0, err_nc0 = 0.0;
  for (std::size_t n = 0; n < g.size(); ++n) {
    if (g.node(n) < 1.0) continue;
    const double exact = oracle::exact_integral_const(g.node(n), 0.5);
    gap = std::max(gap, std::fabs(gl[n] - nc0[n]));
    err_gl = std::max(err_gl, std::fabs(gl[n] - exact));
    err_nc0 = std::max(err_nc0, std::fabs(nc0[n] - exact));
  }
  const double bound = 10.0 * std::max(err_gl, err_nc0);
  report(3, gap < bound, "max|GL-NC0| on [1,10] " + fmt("%.3e", gap) + " < 10 x max own error " + fmt("%.3e", bound) +
                             " (GL " + fmt("%.3e", err_gl) + ", NC0 " + fmt("%.3e", err_nc0) + ")");
}

void criterion4() {
  const auto g = UniformGrid::over(10.0, 1500);
  const auto f = sample(g, expo);
  double worst = 0.0;
  for (double a : {0.25, 0.5, 0.75}) {
    for (Scheme s : {Scheme::kGL, Scheme::kNC0}) {
      const auto out = frac_integral(f, make_weights(s, a, g.dt(), g.size()), ConvolutionMethod::kFft);
      for (std::size_t n = 0; n < g.size(); ++n) {
        if (g.node(n) < 1.0 || g.node(n) > 8.0) continue;
        worst = std::max(worst, ts::relative(out[n], oracle::exact_integral_exp(g.node(n), a)));
      }
    }
  }
  double oracle_gap = 0.0;
  for (int i = 1; i <= 10; ++i) {
    const double t = 0.8 * i;
    for (double a : {0.25, 0.5, 0.75}) {
      const double bf = oracle::brute_force_rl(expo, t, a, 1e-12);
      oracle_gap = std::max(oracle_gap, ts::relative(bf, oracle::exact_integral_exp(t, a)));
    }
  }
  report(4, worst < 1e-2 && oracle_gap < 1e-9,
         "GL/NC0 on e^t, t in [1,8]: max rel err " + fmt("%.3e", worst) + " (< 1e-2); brute force vs closed form " +
             fmt("%.3e", oracle_gap) + " rel at 10 probes (< 1e-9)");
}

std::vector<double> orders(const std::vector<double>& errs) {
  std::vector<double> out;
  for (std::size_t i = 1; i < errs.size(); ++i) out.push_back(std::log2(errs[i - 1] / errs[i]));
  return out;
}

void criterion5() {
  const std::vector<std::size_t> ns = {250, 500, 1000, 2000};
  const double exact = oracle::exact_integral_exp(1.0, 0.5);
  std::vector<double> e_gl, e_nc0, e_trap;
  for (std::size_t n : ns) {
    const auto g = UniformGrid::over(1.0, n);
    const auto f = sample(g, expo);
    e_gl.push_back(std::fabs(frac_integral(f, gl_weights(0.5, g.dt(), g.size()))[n] - exact));
    e_nc0.push_back(std::fabs(frac_integral(f, nc0_weights(0.5, g.dt(), g.size()))[n] - exact));
    e_trap.push_back(std::fabs(frac_newton_cotes(f, 0.5, 2)[n] - exact));
  }
  const double o_gl = orders(e_gl).back(), o_nc0 = orders(e_nc0).back(), o_trap = orders(e_trap).back();

  double quad_err = 0.0;
  const UniformGrid g(0.01, 201);
  const auto quad = SampledSignal::sample(g, [](double t) { return 1.0 - 2.0 * t + 0.5 * t * t; });
  for (double a : {0.25, 0.5, 0.75, 1.0}) {
    const auto out = frac_newton_cotes(quad, a, 3);
    for (std::size_t n = 0; n < g.size(); ++n) {
      const double t = g.node(n);
      const double ex = oracle::exact_integral_monomial(t, a, 0.0) - 2.0 * oracle::exact_integral_monomial(t, a, 1.0) +
                        0.5 * oracle::exact_integral_monomial(t, a, 2.0);
      quad_err = std::max(quad_err, std::fabs(out[n] - ex));
    }
  }
  const bool pass = o_gl >= 0.85 && o_gl <= 1.15 && o_nc0 >= 0.85 && o_nc0 <= 1.15 && o_trap >= 1.5 && quad_err < 1e-11;
  report(5, pass, "orders on e^t at t=1: GL " + fmt("%.3f", o_gl) + ", NC0 " + fmt("%.3f", o_nc0) +
                      " (in [0.85,1.15]), trapezoid (p=2) " + fmt("%.3f", o_trap) + " (>= 1.5); p=3 on quadratics " +
                      fmt("%.2e", quad_err) + " (< 1e-11)");
}

void criterion6() {
  const std::size_t n = 10000;
  const std::array<double, 2> sigma = {0.0, 1.0};  // sigma(zeta) = zeta
  const std::array<double, 2> rho = {-1.0, 1.0};    // rho(zeta) = zeta - 1
  const auto euler = flmm_weights(sigma, rho, 0.5, 0.01, n);
  const auto gl = gl_weights(0.5, 0.01, n);
  double flmm_gap = 0.0;
  for (std::size_t k = 0; k < n; ++k) flmm_gap = std::max(flmm_gap, ts::relative(euler[k], gl[k]));

  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> u(0.5, 2.0);
  double path_gap = 0.0;
  for (std::size_t m : {1000u, 16384u, 65536u}) {
    const UniformGrid g(1.0 / m, m);
    std::vector<double> v(m);
    for (double& x : v) x = u(rng);
    const SampledSignal s(g, std::move(v));
    for (Scheme scheme : {Scheme::kGL, Scheme::kNC0, Scheme::kFlmmTrap}) {
      const auto w = make_weights(scheme, 0.5, g.dt(), m);
      const auto d = frac_integral(s, w, ConvolutionMethod::kDirect);
      const auto f = frac_integral(s, w, ConvolutionMethod::kFft);
      for (std::size_t i = 0; i < m; ++i) {
        if (d[i] != 0.0) path_gap = std::max(path_gap, ts::relative(f[i], d[i]));
      }
    }
  }

  const UniformGrid g(0.05, 41);
  const auto f = SampledSignal::sample(g, [](double t) { return std::cos(3.0 * t) + t * t; });
  const std::vector<double> fv(f.values().begin(), f.values().end());
  const auto rect = ts::cumulative_rectangle(fv, g.dt());
  const auto trap = ts::cumulative_trapezoid(fv, g.dt());
  const auto simp = ts::cumulative_simpson_even(fv, g.dt());
  const auto gl1 = frac_integral(f, gl_weights(1.0, g.dt(), g.size()));
  const auto nc2 = frac_newton_cotes(f, 1.0, 2);
  const auto ftrap = frac_trapezoid(f, 1.0);
  const auto nc3 = frac_newton_cotes(f, 1.0, 3);
  double classical = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    classical = std::max({classical, std::fabs(gl1[i] - rect[i]), std::fabs(nc2[i] - trap[i]),
                          std::fabs(ftrap[i] - trap[i])});
    if (i % 2 == 0) classical = std::max(classical, std::fabs(nc3[i] - simp[i]));
  }
  report(6, flmm_gap <= 1e-12 && path_gap <= 1e-10 && classical <= 1e-11,
         "FLMM(Euler) vs GL, N=1e4: " + fmt("%.2e", flmm_gap) + " (<= 1e-12); direct vs FFT up to 2^16: " +
             fmt("%.2e", path_gap) + " rel (<= 1e-10); alpha=1 vs rectangle/trapezoid/Simpson: " +
             fmt("%.2e", classical) + " (<= 1e-11)");
}

void criterion7() {
  std::vector<double> gaps;
  for (std::size_t n : {250u, 500u, 1000u, 2000u}) {
    const auto g = UniformGrid::over(1.0, n);
    const auto f = sample(g, expo);
    const auto twice = frac_integral(frac_integral(f, nc0_weights(0.3, g.dt(), g.size())), nc0_weights(0.4, g.dt(), g.size()));
    const auto once = frac_integral(f, nc0_weights(0.7, g.dt(), g.size()));
    gaps.push_back(std::fabs(twice[n] - once[n]));
  }
  const auto o = orders(gaps);
  const double worst = *std::min_element(o.begin(), o.end());
  report(7, worst >= 0.85, "I^0.3 I^0.4 vs I^0.7 on e^t at t=1 (NC0): discrepancy " + fmt("%.3e", gaps.front()) +
                               " -> " + fmt("%.3e", gaps.back()) + ", min order " + fmt("%.3f", worst) + " (>= 0.85)");
}

void criterion8() {
  const UniformGrid g(0.005, 8001);
  const auto f = SampledSignal::sample(g, [](double t) { return std::sin(t); });
  const auto d = gl_derivative(f, DerivativeOrder(0.5), Direction::kBackward, ConvolutionMethod::kFft);
  double worst = 0.0;
  for (std::size_t n = 0; n < g.size(); ++n) {
    const double t = g.node(n);
    if (t < 20.0) continue;
    worst = std::max(worst, std::fabs(d[n] - oracle::exact_derivative_sin(t, 1.0, 0.5)));
  }
  report(8, worst <= 1e-2, "GL D^0.5 sin on [20,40], dt=0.005: max deviation " + fmt("%.3e", worst) +
                               " relative to amplitude 1 (<= 1e-2)");
}

void criterion9() {
  double worst_ratio = 0.0, worst_shift = 0.0;
  for (double n : {0.25, 0.5, 0.75}) {
    const auto base = dielectric::verify_universal_ratio(n);
    dielectric::RatioProbe fast;
    fast.omega0 *= 4.0;
    const auto high = dielectric::verify_universal_ratio(n, fast);
    worst_ratio = std::max({worst_ratio, ts::relative(base.numeric, base.analytic), ts::relative(high.numeric, high.analytic)});
    worst_shift = std::max(worst_shift, ts::relative(high.numeric, base.numeric));
  }
  report(9, worst_ratio < 0.02 && worst_shift < 0.02,
         "chi''/chi' from time domain vs cot(n pi/2), n in {0.25,0.5,0.75}: max rel dev " + fmt("%.3e", worst_ratio) +
             " (< 2e-2); omega0 vs 4 omega0 " + fmt("%.3e", worst_shift) + " (< 2e-2)");
}

void criterion10() {
  double err_t = 0.0, err_one = 0.0;
  for (double a : {0.25, 0.5, 0.75}) {
    const auto g = UniformGrid::over(10.0, 1500);
    const auto w = gl_weights(a, g.dt(), g.size());
    const auto lin = frac_integral_corrected(sample(g, ident), w, 1);
    const auto cst = frac_integral_corrected(sample(g, one), w, 0);
    for (std::size_t n = 0; n < g.size(); ++n) {
      const double t = g.node(n);
      if (n >= 1) err_t = std::max(err_t, std::fabs(lin[n] - oracle::exact_integral_monomial(t, a, 1.0)));
      err_one = std::max(err_one, std::fabs(cst[n] - oracle::exact_integral_const(t, a)));
    }
  }
  report(10, err_t <= 1e-10 && err_one <= 1e-10,
         "starting weights with GL: s=1 on f=t max err " + fmt("%.2e", err_t) + ", s=0 on f=1 max err " +
             fmt("%.2e", err_one) + " (<= 1e-10)");
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> checks = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                     criterion6, criterion7, criterion8, criterion9, criterion10};
  for (const auto& check : checks) check();
  std::printf("%d of %zu criteria failed\n", failures, checks.size());
  return failures == 0 ? 0 : 1;
}
