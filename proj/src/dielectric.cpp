// Copyright 2026 The fracquad Authors
// SPDX-License-Identifier: Apache-2.0

#include "fracquad/dielectric.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "dense_solve.hpp"
#include "fracquad/errors.hpp"

namespace fracquad::dielectric {

double loss_ratio(std::complex<double> chi, TimeConvention convention) {
  const double loss = (convention == TimeConvention::kPlusJ) ? -chi.imag() : chi.imag();
  return loss / chi.real();
}

UniversalResponse::UniversalResponse(double n_exp) : n_exp_(n_exp) {
  if (!(n_exp > 0.0 && n_exp < 1.0)) {
    throw DomainError("UniversalResponse: exponent n must lie in (0, 1)");
  }
}

void DebyeModel::validate() const {
  if (!(tau > 0.0)) throw DomainError("DebyeModel: tau must be positive");
  if (!(n_density > 0.0)) throw DomainError("DebyeModel: density must be positive");
  if (!(eps0 > 0.0)) throw DomainError("DebyeModel: eps0 must be positive");
}

LorentzEnsemble::LorentzEnsemble(std::vector<LorentzMode> modes, double electrons_per_molecule,
                                 double density, double charge, double mass, double eps0)
    : modes_(std::move(modes)),
      electrons_(electrons_per_molecule),
      density_(density),
      charge_(charge),
      mass_(mass),
      eps0_(eps0) {
  if (modes_.empty()) throw DomainError("LorentzEnsemble: at least one mode required");
  if (!(density > 0.0) || !(mass > 0.0) || !(eps0 > 0.0)) {
    throw DomainError("LorentzEnsemble: density, mass and eps0 must be positive");
  }
  double total = 0.0;
  for (const auto& m : modes_) {
    if (!(m.weight >= 0.0) || !(m.omega > 0.0) || !(m.gamma >= 0.0)) {
      throw DomainError("LorentzEnsemble: need weight >= 0, omega > 0, gamma >= 0");
    }
    total += m.weight;
  }
  if (std::fabs(total - electrons_) > 1e-12 * std::max(1.0, std::fabs(electrons_))) {
    throw DomainError("LorentzEnsemble: mode weights sum to " + std::to_string(total) +
                      ", expected " + std::to_string(electrons_));
  }
}

std::complex<double> universal_susceptibility(const UniversalResponse& model, double omega,
                                              double scale) {
  if (!(omega > 0.0)) throw DomainError("universal_susceptibility: omega must be positive");
  const double exponent = model.n_exp() - 1.0;
  return std::polar(scale * std::pow(omega, exponent), 0.5 * std::numbers::pi * exponent);
}

std::complex<double> debye_susceptibility(const DebyeModel& model, double omega) {
  model.validate();
  const double stat = model.n_density * model.a_coupling * model.tau / model.eps0;
  return stat / std::complex<double>(1.0, -omega * model.tau);
}

LorentzResponse lorentz_susceptibility(const LorentzEnsemble& model, double omega) {
  if (!(omega >= 0.0)) throw DomainError("lorentz_susceptibility: omega must be >= 0");
  LorentzResponse out;
  std::complex<double> sum = 0.0;
  for (const auto& m : model.modes()) {
    const std::complex<double> den(m.omega * m.omega - omega * omega, -m.gamma * omega);
    const double detuning = std::fabs(omega - m.omega);
    if (detuning < m.gamma / 100.0 || (m.gamma == 0.0 && detuning <= 1e-9 * m.omega)) {
      out.resonance_warning = true;
    }
    sum += m.weight / den;
  }
  out.chi = model.plasma_factor() * sum;
  return out;
}

SampledSignal fractional_polarization(const SampledSignal& e_field, double alpha, double eps0,
                                      Scheme scheme, ConvolutionMethod method) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("fractional_polarization: alpha must lie in (0, 1)");
  }
  const WeightSequence w = make_weights(scheme, alpha, e_field.grid().dt(), e_field.size());
  const SampledSignal integral = frac_integral(e_field, w, method);
  std::vector<double> p(integral.values().begin(), integral.values().end());
  for (double& v : p) v *= eps0;
  return SampledSignal(e_field.grid(), std::move(p));
}

SinusoidFit fit_sinusoid(const SampledSignal& signal, double omega, double t_from, double t_to) {
  constexpr std::size_t kBasis = 5;
  const UniformGrid& grid = signal.grid();
  const double mid = 0.5 * (t_from + t_to);
  const double half = 0.5 * (t_to - t_from);
  if (!(half > 0.0)) throw FitError("fit_sinusoid: empty window");

  const auto basis = [&](double t) {
    const double s = (t - mid) / half;
    return std::array<double, kBasis>{std::sin(omega * t), std::cos(omega * t), 1.0, s, s * s};
  };

  std::vector<double> normal(kBasis * kBasis, 0.0);
  std::vector<double> rhs(kBasis, 0.0);
  std::size_t used = 0;
  for (std::size_t i = 0; i < signal.size(); ++i) {
    const double t = grid.node(i);
    if (t < t_from || t > t_to) continue;
    const auto b = basis(t);
    for (std::size_t r = 0; r < kBasis; ++r) {
      rhs[r] += b[r] * signal[i];
      for (std::size_t c = 0; c < kBasis; ++c) normal[r * kBasis + c] += b[r] * b[c];
    }
    ++used;
  }
  if (used < 4 * kBasis) throw FitError("fit_sinusoid: too few samples in window");
  const auto coeff = detail::dense_solve(std::move(normal), std::move(rhs));

  double sq = 0.0;
  for (std::size_t i = 0; i < signal.size(); ++i) {
    const double t = grid.node(i);
    if (t < t_from || t > t_to) continue;
    const auto b = basis(t);
    double model = 0.0;
    for (std::size_t r = 0; r < kBasis; ++r) model += coeff[r] * b[r];
    sq += (signal[i] - model) * (signal[i] - model);
  }
  SinusoidFit fit;
  fit.sin_coeff = coeff[0];
  fit.cos_coeff = coeff[1];
  fit.amplitude = std::hypot(coeff[0], coeff[1]);
  fit.rms_residual = std::sqrt(sq / static_cast<double>(used));
  return fit;
}

RatioCheck verify_universal_ratio(double n_exp, const RatioProbe& probe) {
  const UniversalResponse model(n_exp);
  if (!(probe.dt > 0.0) || !(probe.t_end > probe.dt)) {
    throw DomainError("verify_universal_ratio: need 0 < dt < t_end");
  }
  const auto steps = static_cast<std::size_t>(std::llround(probe.t_end / probe.dt));
  const UniformGrid grid = UniformGrid::over(probe.t_end, steps);
  const SampledSignal field =
      SampledSignal::sample(grid, [&](double t) { return std::sin(probe.omega0 * t); });
  const SampledSignal p =
      fractional_polarization(field, model.alpha(), 1.0, probe.scheme, ConvolutionMethod::kFft);

  const double t_end = grid.t_end();
  const SinusoidFit fit = fit_sinusoid(p, probe.omega0, 0.75 * t_end, t_end);
  if (!(fit.rms_residual <= 0.05 * fit.amplitude)) {
    throw FitError("verify_universal_ratio: fit residual above 5% of amplitude");
  }
  // P = A sin + B cos = chi' sin - chi'' cos for a unit sine drive.
  return {1.0 / std::tan(0.5 * std::numbers::pi * n_exp), -fit.cos_coeff / fit.sin_coeff};
}

}  // namespace fracquad::dielectric
