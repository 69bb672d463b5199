// Copyright 2026 The fracquad Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <numbers>
#include <vector>

#include "fracquad/grid.hpp"
#include "fracquad/quadrature.hpp"
#include "fracquad/weights.hpp"

/// Linear dielectric response models and the time-domain fractional
/// polarization P = eps0 I^alpha[E]. Time-domain quantities are in
/// dimensionless model units.
namespace fracquad::dielectric {

/// Sign convention of the harmonic time factor a susceptibility was derived
/// with. The loss part chi'' is the dissipative (positive) component.
enum class TimeConvention {
  kPlusJ,   // e^{+j w t}: chi = chi' - j chi''
  kMinusJ,  // e^{-j w t}: chi = chi' + j chi''
};

/// chi'' / chi' under the given convention.
double loss_ratio(std::complex<double> chi, TimeConvention convention);

/// Jonscher power law chi ~ (j w)^(n-1), with alpha = 1 - n.
class UniversalResponse {
 public:
  explicit UniversalResponse(double n_exp);
  double n_exp() const { return n_exp_; }
  double alpha() const { return 1.0 - n_exp_; }
  static constexpr TimeConvention kConvention = TimeConvention::kPlusJ;

 private:
  double n_exp_;
};

/// Single relaxation time dipole model.
struct DebyeModel {
  double n_density = 1.0;
  double a_coupling = 1.0;
  double tau = 1.0;
  double eps0 = 1.0;
  static constexpr TimeConvention kConvention = TimeConvention::kMinusJ;

  void validate() const;
};

struct LorentzMode {
  double weight;  // electrons in this state
  double omega;   // characteristic angular frequency
  double gamma;   // damping constant
};

/// Damped oscillator ensemble.
class LorentzEnsemble {
 public:
  /// Throws DomainError unless the mode weights sum to electrons_per_molecule.
  LorentzEnsemble(std::vector<LorentzMode> modes, double electrons_per_molecule,
                  double density = 1.0, double charge = 1.0, double mass = 1.0,
                  double eps0 = 1.0);

  const std::vector<LorentzMode>& modes() const { return modes_; }
  double electrons_per_molecule() const { return electrons_; }
  /// N e^2 / (eps0 m)
  double plasma_factor() const { return density_ * charge_ * charge_ / (eps0_ * mass_); }
  static constexpr TimeConvention kConvention = TimeConvention::kMinusJ;

 private:
  std::vector<LorentzMode> modes_;
  double electrons_;
  double density_;
  double charge_;
  double mass_;
  double eps0_;
};

struct LorentzResponse {
  std::complex<double> chi;
  /// Set when omega sits within gamma_i / 100 of some omega_i (or on an
  /// undamped resonance), where the response is dominated by one pole.
  bool resonance_warning = false;
};

/// scale * (j omega)^(n - 1), principal branch. Throws DomainError for omega <= 0.
std::complex<double> universal_susceptibility(const UniversalResponse& model, double omega,
                                              double scale = 1.0);

/// N a tau / (eps0 (1 - j omega tau)).
std::complex<double> debye_susceptibility(const DebyeModel& model, double omega);

/// (N e^2 / eps0 m) sum_i f_i / ((omega_i^2 - omega^2) - j gamma_i omega).
LorentzResponse lorentz_susceptibility(const LorentzEnsemble& model, double omega);

/// P = eps0 I^alpha[E] on the field's grid, alpha in (0, 1).
SampledSignal fractional_polarization(const SampledSignal& e_field, double alpha, double eps0,
                                      Scheme scheme,
                                      ConvolutionMethod method = ConvolutionMethod::kDirect);

/// Least-squares fit of a*sin(w t) + b*cos(w t) plus a quadratic trend over
/// the nodes with t in [t_from, t_to]. The trend absorbs the slowly decaying
/// start-up transient of a causal fractional integral.
struct SinusoidFit {
  double sin_coeff = 0.0;
  double cos_coeff = 0.0;
  double amplitude = 0.0;
  double rms_residual = 0.0;
};

SinusoidFit fit_sinusoid(const SampledSignal& signal, double omega, double t_from, double t_to);

struct RatioProbe {
  double omega0 = 2.0 * std::numbers::pi;
  double dt = 1e-3;
  double t_end = 20.0;
  Scheme scheme = Scheme::kFlmmTrap;
};

struct RatioCheck {
  double analytic;
  double numeric;
};

/// cot(n pi / 2) against chi''/chi' recovered from a time-domain run: drive
/// P = I^(1-n)[sin(omega0 t)], fit the steady state over [0.75 T, T], and read
/// the phase lag. Throws FitError when the fit residual exceeds 5% of the
/// amplitude.
RatioCheck verify_universal_ratio(double n_exp, const RatioProbe& probe = {});

}  // namespace fracquad::dielectric
