// Copyright 2026 The fracquad Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "fracquad/derivative.hpp"
#include "fracquad/dielectric.hpp"
#include "fracquad/errors.hpp"
#include "fracquad/oracle.hpp"
#include "fracquad/quadrature.hpp"
#include "fracquad/weights.hpp"

namespace fracquad::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shortest text that parses back to the same double.
std::string num(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void header(const std::vector<std::string>& names) { line(names); }

  void row(const std::vector<double>& values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (double v : values) cells.push_back(num(v));
    line(cells);
  }

 private:
  void line(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out_ << ',';
      out_ << cells[i];
    }
    out_ << '\n';
  }

  std::ostream& out_;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::optional<double> parse_double(std::string_view s) {
  s = trim(s);
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// Reads a `t,f` CSV whose t column lies on a uniform grid starting at 0.
SampledSignal load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  std::vector<double> ts, fs;
  std::vector<std::size_t> line_of;
  std::string line;
  std::size_t lineno = 0;
  bool seen_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view text = trim(line);
    if (text.empty()) continue;
    if (!seen_header) {
      if (text != "t,f") throw DataError(path + ":" + std::to_string(lineno) + ": expected header 't,f'");
      seen_header = true;
      continue;
    }
    const auto comma = text.find(',');
    if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
      throw DataError(path + ":" + std::to_string(lineno) + ": expected two fields");
    }
    const auto t = parse_double(text.substr(0, comma));
    const auto f = parse_double(text.substr(comma + 1));
    if (!t || !f || !std::isfinite(*t) || !std::isfinite(*f)) {
      throw DataError(path + ":" + std::to_string(lineno) + ": not a finite number");
    }
    ts.push_back(*t);
    fs.push_back(*f);
    line_of.push_back(lineno);
  }
  if (!seen_header) throw DataError(path + ": empty file");
  if (ts.size() < 2) throw DataError(path + ": need at least two data rows");
  const double dt = ts.back() / static_cast<double>(ts.size() - 1);
  if (!(dt > 0.0)) throw DataError(path + ": t must increase from 0");
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (std::fabs(ts[i] - static_cast<double>(i) * dt) > 1e-9 * dt) {
      throw DataError(path + ":" + std::to_string(line_of[i]) + ": t = " + num(ts[i]) +
                      " is off the uniform grid (dt = " + num(dt) + ")");
    }
  }
  return SampledSignal(UniformGrid(dt, ts.size()), std::move(fs));
}

// Analytic integrands c, c e^t, c sin(omega0 t), or sampled data.
struct Integrand {
  std::string source = "const";
  double c = 1.0;
  double omega0 = 1.0;

  bool is_csv() const { return source.rfind("csv:", 0) == 0; }

  std::function<double(double)> function() const {
    const double cc = c, w = omega0;
    if (source == "exp") return [cc](double t) { return cc * std::exp(t); };
    if (source == "sin") return [cc, w](double t) { return cc * std::sin(w * t); };
    return [cc](double) { return cc; };
  }

  SampledSignal signal(double t_end, std::size_t n) const {
    if (is_csv()) return load_csv(source.substr(4));
    if (!(t_end > 0.0) || n == 0) throw UsageError("--t-end must be positive and --n at least 1");
    return SampledSignal::sample(UniformGrid::over(t_end, n), function());
  }

  // Closed-form RL integral, when one exists.
  std::optional<std::function<double(double)>> exact_integral(double alpha) const {
    const double cc = c;
    if (source == "const") return [=](double t) { return oracle::exact_integral_const(t, alpha, cc); };
    if (source == "exp") return [=](double t) { return cc * oracle::exact_integral_exp(t, alpha); };
    return std::nullopt;
  }

  std::function<double(double)> brute_force_integral(double alpha) const {
    auto f = function();
    return [f, alpha](double t) { return oracle::brute_force_rl(f, t, alpha, 1e-10); };
  }

  std::optional<std::function<double(double)>> exact_derivative(double alpha) const {
    const double cc = c, w = omega0;
    if (source == "const") {
      return [=](double t) { return cc * oracle::exact_derivative_monomial(t, alpha, 0.0); };
    }
    if (source == "exp" && alpha > 0.0 && alpha < 1.0) {
      return [=](double t) { return cc * oracle::exact_derivative_exp(t, alpha); };
    }
    if (source == "sin") return [=](double t) { return cc * oracle::exact_derivative_sin(t, w, alpha); };
    return std::nullopt;
  }
};

const std::map<std::string, Scheme> kConvSchemes = {
    {"gl", Scheme::kGL}, {"nc0", Scheme::kNC0}, {"flmm-trap", Scheme::kFlmmTrap}};

const std::map<std::string, ConvolutionMethod> kMethods = {{"direct", ConvolutionMethod::kDirect},
                                                           {"fft", ConvolutionMethod::kFft}};

bool is_conv_scheme(const std::string& s) { return kConvSchemes.count(s) != 0; }

struct QuadratureChoice {
  std::string scheme = "gl";
  std::string method = "direct";
  std::size_t memory = 0;
  int starting = -1;
};

SampledSignal integrate_signal(const SampledSignal& signal, double alpha, const QuadratureChoice& q) {
  const ConvolutionMethod method = kMethods.at(q.method);
  if (!is_conv_scheme(q.scheme)) {
    if (q.memory > 0 || q.starting >= 0) {
      throw UsageError("--memory and --starting-weights need a convolution scheme (gl, nc0, flmm-trap)");
    }
    if (q.scheme == "trapezoid") return frac_trapezoid(signal, alpha, method);
    return frac_newton_cotes(signal, alpha, q.scheme == "nc2" ? 2 : 3);
  }
  if (q.memory > 0 && q.starting >= 0) throw UsageError("--memory and --starting-weights are exclusive");
  const auto& grid = signal.grid();
  const auto weights = make_weights(kConvSchemes.at(q.scheme), alpha, grid.dt(), grid.size());
  if (q.memory > 0) return short_memory_integral(signal, weights, q.memory);
  if (q.starting >= 0) return frac_integral_corrected(signal, weights, q.starting, method);
  return frac_integral(signal, weights, method);
}

// Rows t, approx[, exact, abs_err, rel_err] for nodes 1..N.
void write_series(std::ostream& out, const SampledSignal& approx,
                  const std::optional<std::function<double(double)>>& exact) {
  CsvWriter csv(out);
  if (exact) {
    csv.header({"t", "approx", "exact", "abs_err", "rel_err"});
  } else {
    csv.header({"t", "approx"});
  }
  const auto& grid = approx.grid();
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double t = grid.node(i);
    if (exact) {
      const double e = (*exact)(t);
      const double abs_err = std::fabs(approx[i] - e);
      csv.row({t, approx[i], e, abs_err, abs_err / std::fabs(e)});
    } else {
      csv.row({t, approx[i]});
    }
  }
}

CLI::Validator integrand_validator() {
  return CLI::Validator(
      [](std::string& s) -> std::string {
        if (s == "const" || s == "exp" || s == "sin") return {};
        if (s.rfind("csv:", 0) == 0 && s.size() > 4) return {};
        return "must be const, exp, sin or csv:<path>";
      },
      "const|exp|sin|csv:PATH");
}

void add_integrand_options(CLI::App* cmd, Integrand& f) {
  cmd->add_option("--f", f.source, "Integrand")->check(integrand_validator())->capture_default_str();
  cmd->add_option("--c", f.c, "Amplitude of the analytic integrand")->capture_default_str();
  cmd->add_option("--omega0", f.omega0, "Angular frequency for --f sin")->capture_default_str();
}

struct CoeffsArgs {
  std::string scheme = "gl";
  double alpha = 0.5;
  double dt = 1.0;
  std::size_t count = 10;
  bool derivative = false;
};

void cmd_coeffs(const CoeffsArgs& a, std::ostream& out) {
  const double order = a.derivative ? -a.alpha : a.alpha;
  const auto w = make_weights(kConvSchemes.at(a.scheme), order, a.dt, a.count);
  CsvWriter csv(out);
  csv.header({"k", "weight"});
  for (std::size_t k = 0; k < w.size(); ++k) csv.row({static_cast<double>(k), w[k]});
}

struct IntegrateArgs {
  Integrand f;
  double alpha = 0.5;
  double t_end = 1.0;
  std::size_t n = 100;
  QuadratureChoice q;
  bool oracle = false;
};

void cmd_integrate(const IntegrateArgs& a, std::ostream& out) {
  if (a.oracle && a.f.is_csv()) throw UsageError("--oracle needs an analytic integrand");
  const SampledSignal signal = a.f.signal(a.t_end, a.n);
  const SampledSignal approx = integrate_signal(signal, a.alpha, a.q);
  std::optional<std::function<double(double)>> exact;
  if (a.oracle) {
    exact = a.f.brute_force_integral(a.alpha);
  } else if (!a.f.is_csv()) {
    exact = a.f.exact_integral(a.alpha);
  }
  write_series(out, approx, exact);
}

struct DifferentiateArgs {
  Integrand f;
  double alpha = 0.5;
  double t_end = 1.0;
  std::size_t n = 100;
  std::string route = "gl";
  std::string scheme = "nc0";
  std::string direction = "backward";
  std::string method = "direct";
};

void cmd_differentiate(const DifferentiateArgs& a, std::ostream& out) {
  const SampledSignal signal = a.f.signal(a.t_end, a.n);
  const DerivativeOrder order(a.alpha);
  const ConvolutionMethod method = kMethods.at(a.method);
  const bool forward = a.direction == "forward";
  if (a.route == "rl" && forward) throw UsageError("--direction forward is only available for --route gl");
  const SampledSignal approx =
      a.route == "gl"
          ? gl_derivative(signal, order, forward ? Direction::kForward : Direction::kBackward, method)
          : rl_derivative_via_integral(signal, order, kConvSchemes.at(a.scheme), method);
  std::optional<std::function<double(double)>> exact;
  if (!a.f.is_csv() && !forward) exact = a.f.exact_derivative(a.alpha);
  write_series(out, approx, exact);
}

struct ConvergenceArgs {
  Integrand f{"exp"};
  double alpha = 0.5;
  std::vector<std::size_t> n_list;
  double t_probe = 1.0;
  QuadratureChoice q;
};

void cmd_convergence(const ConvergenceArgs& a, std::ostream& out) {
  if (a.f.is_csv()) throw UsageError("convergence needs an analytic integrand");
  if (a.n_list.size() < 3) throw UsageError("--n-list needs at least three grid sizes");
  if (!(a.t_probe > 0.0)) throw UsageError("--t-probe must be positive");
  const auto closed = a.f.exact_integral(a.alpha);
  const double exact = closed ? (*closed)(a.t_probe)
                              : oracle::brute_force_rl(a.f.function(), a.t_probe, a.alpha, 1e-12);
  CsvWriter csv(out);
  csv.header({"n", "dt", "abs_err", "empirical_order"});
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  double prev_err = 0.0;
  std::size_t prev_n = 0;
  bool prev_noise = true;
  for (std::size_t n : a.n_list) {
    if (n == 0) throw UsageError("grid sizes must be positive");
    const auto signal = SampledSignal::sample(UniformGrid::over(a.t_probe, n), a.f.function());
    const double err = std::fabs(integrate_signal(signal, a.alpha, a.q)[n] - exact);
    // Errors this small are rounding, not discretization.
    const bool noise = err <= 64.0 * kEps * std::max(1.0, std::fabs(exact));
    double order = std::numeric_limits<double>::quiet_NaN();
    if (prev_n != 0 && !noise && !prev_noise && n != prev_n) {
      order = std::log(prev_err / err) / std::log(static_cast<double>(n) / static_cast<double>(prev_n));
    }
    csv.row({static_cast<double>(n), a.t_probe / static_cast<double>(n), err, order});
    prev_err = err;
    prev_n = n;
    prev_noise = noise;
  }
}

struct DielectricArgs {
  std::string model = "universal";
  double n_exp = 0.5;
  std::vector<double> n_list;
  double scale = 1.0;
  double tau = 1.0;
  double density = 1.0;
  double coupling = 1.0;
  double eps0 = 1.0;
  double charge = 1.0;
  double mass = 1.0;
  double electrons = -1.0;
  std::vector<std::string> modes;
  std::string omega_range;
  bool time_domain = false;
  bool verify_ratio = false;
  double omega0 = 2.0 * std::numbers::pi;
  double dt = 1e-3;
  double t_end = 20.0;
  double e0 = 1.0;
  std::string scheme = "flmm-trap";
  std::string method = "fft";
};

std::vector<double> parse_omega_range(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
  if (c2 == std::string::npos) throw UsageError("--omega-range must be start:stop:count");
  const auto start = parse_double(std::string_view(text).substr(0, c1));
  const auto stop = parse_double(std::string_view(text).substr(c1 + 1, c2 - c1 - 1));
  const auto count = parse_double(std::string_view(text).substr(c2 + 1));
  if (!start || !stop || !count || *count < 1.0 || *count != std::floor(*count)) {
    throw UsageError("--omega-range must be start:stop:count with count a positive integer");
  }
  const auto n = static_cast<std::size_t>(*count);
  std::vector<double> omegas(n);
  for (std::size_t i = 0; i < n; ++i) {
    omegas[i] = n == 1 ? *start : *start + (*stop - *start) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return omegas;
}

dielectric::LorentzEnsemble make_lorentz(const DielectricArgs& a) {
  if (a.modes.empty()) throw UsageError("--model lorentz needs at least one --mode f:omega:gamma");
  std::vector<dielectric::LorentzMode> modes;
  for (const auto& m : a.modes) {
    const auto c1 = m.find(':');
    const auto c2 = c1 == std::string::npos ? std::string::npos : m.find(':', c1 + 1);
    if (c2 == std::string::npos) throw UsageError("--mode must be f:omega:gamma");
    const auto f = parse_double(std::string_view(m).substr(0, c1));
    const auto w = parse_double(std::string_view(m).substr(c1 + 1, c2 - c1 - 1));
    const auto g = parse_double(std::string_view(m).substr(c2 + 1));
    if (!f || !w || !g) throw UsageError("--mode must be f:omega:gamma");
    modes.push_back({*f, *w, *g});
  }
  if (a.electrons < 0.0) throw UsageError("--model lorentz needs --electrons");
  return dielectric::LorentzEnsemble(std::move(modes), a.electrons, a.density, a.charge, a.mass, a.eps0);
}

void cmd_dielectric(const DielectricArgs& a, std::ostream& out, std::ostream& err) {
  CsvWriter csv(out);
  if (a.verify_ratio) {
    dielectric::RatioProbe probe;
    probe.omega0 = a.omega0;
    probe.dt = a.dt;
    probe.t_end = a.t_end;
    probe.scheme = kConvSchemes.at(a.scheme);
    csv.header({"n", "analytic", "numeric", "rel_dev"});
    const std::vector<double> ns = a.n_list.empty() ? std::vector<double>{a.n_exp} : a.n_list;
    for (double n : ns) {
      const auto r = dielectric::verify_universal_ratio(n, probe);
      csv.row({n, r.analytic, r.numeric, std::fabs(r.numeric - r.analytic) / std::fabs(r.analytic)});
    }
    return;
  }
  if (a.time_domain) {
    if (a.model != "universal") throw UsageError("--time-domain is only defined for --model universal");
    const dielectric::UniversalResponse model(a.n_exp);
    if (!(a.dt > 0.0) || !(a.t_end > a.dt)) throw UsageError("need 0 < --dt < --t-end");
    const auto steps = static_cast<std::size_t>(std::llround(a.t_end / a.dt));
    const UniformGrid grid(a.dt, steps + 1);
    const double e0 = a.e0, w = a.omega0;
    const auto e = SampledSignal::sample(grid, [e0, w](double t) { return e0 * std::sin(w * t); });
    const auto p = dielectric::fractional_polarization(e, model.alpha(), a.eps0, kConvSchemes.at(a.scheme),
                                                       kMethods.at(a.method));
    csv.header({"t", "E", "P"});
    for (std::size_t i = 1; i < grid.size(); ++i) csv.row({grid.node(i), e[i], p[i]});
    return;
  }
  if (a.omega_range.empty()) throw UsageError("dielectric needs --omega-range, --time-domain or --verify-ratio");
  const auto omegas = parse_omega_range(a.omega_range);
  std::function<std::complex<double>(double)> chi;
  dielectric::TimeConvention convention = dielectric::TimeConvention::kMinusJ;
  if (a.model == "universal") {
    const dielectric::UniversalResponse model(a.n_exp);
    convention = dielectric::UniversalResponse::kConvention;
    chi = [model, s = a.scale](double w) { return dielectric::universal_susceptibility(model, w, s); };
  } else if (a.model == "debye") {
    const dielectric::DebyeModel model{a.density, a.coupling, a.tau, a.eps0};
    model.validate();
    chi = [model](double w) { return dielectric::debye_susceptibility(model, w); };
  } else {
    const auto model = make_lorentz(a);
    chi = [model, &err](double w) {
      const auto r = dielectric::lorentz_susceptibility(model, w);
      if (r.resonance_warning) err << "warning: omega = " << num(w) << " is on a resonance\n";
      return r.chi;
    };
  }
  csv.header({"omega", "chi_re", "chi_im", "ratio"});
  for (double w : omegas) {
    const auto c = chi(w);
    csv.row({w, c.real(), c.imag(), dielectric::loss_ratio(c, convention)});
  }
}

void add_quadrature_options(CLI::App* cmd, QuadratureChoice& q) {
  cmd->add_option("--scheme", q.scheme, "Quadrature rule")
      ->check(CLI::IsMember({"gl", "nc0", "flmm-trap", "trapezoid", "nc2", "nc3"}))
      ->capture_default_str();
  cmd->add_option("--method", q.method, "Convolution evaluation")
      ->check(CLI::IsMember({"direct", "fft"}))
      ->capture_default_str();
  cmd->add_option("--memory", q.memory, "Short-memory length L (nodes)")->check(CLI::PositiveNumber);
  cmd->add_option("--starting-weights", q.starting, "Starting-weight degree s")->check(CLI::Range(0, 3));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fractional integrals, derivatives and dielectric response on uniform grids", "fracquad"};
  app.require_subcommand(1);

  CoeffsArgs coeffs;
  auto* c = app.add_subcommand("coeffs", "Dump quadrature weights as k,weight");
  c->add_option("--scheme", coeffs.scheme, "Weight family")
      ->check(CLI::IsMember({"gl", "nc0", "flmm-trap"}))
      ->capture_default_str();
  c->add_option("--alpha", coeffs.alpha, "Order")->capture_default_str();
  c->add_option("--dt", coeffs.dt, "Step size")->capture_default_str();
  c->add_option("--count", coeffs.count, "Number of weights")->check(CLI::PositiveNumber)->capture_default_str();
  c->add_flag("--derivative", coeffs.derivative, "Derivative weights (order -alpha)");

  IntegrateArgs integ;
  auto* i = app.add_subcommand("integrate", "Riemann-Liouville integral on [0, t-end]");
  add_integrand_options(i, integ.f);
  i->add_option("--alpha", integ.alpha, "Integration order")->capture_default_str();
  i->add_option("--t-end", integ.t_end, "Interval end")->capture_default_str();
  i->add_option("--n", integ.n, "Number of steps")->capture_default_str();
  add_quadrature_options(i, integ.q);
  i->add_flag("--oracle", integ.oracle, "Reference values by adaptive quadrature");

  DifferentiateArgs diff;
  auto* d = app.add_subcommand("differentiate", "Fractional derivative on [0, t-end]");
  add_integrand_options(d, diff.f);
  d->add_option("--alpha", diff.alpha, "Derivative order")->capture_default_str();
  d->add_option("--t-end", diff.t_end, "Interval end")->capture_default_str();
  d->add_option("--n", diff.n, "Number of steps")->capture_default_str();
  d->add_option("--route", diff.route, "gl: Grunwald-Letnikov sum, rl: D^n I^(n-alpha)")
      ->check(CLI::IsMember({"gl", "rl"}))
      ->capture_default_str();
  d->add_option("--scheme", diff.scheme, "Integral rule for --route rl")
      ->check(CLI::IsMember({"gl", "nc0", "flmm-trap"}))
      ->capture_default_str();
  d->add_option("--direction", diff.direction, "Difference direction for --route gl")
      ->check(CLI::IsMember({"backward", "forward"}))
      ->capture_default_str();
  d->add_option("--method", diff.method, "Convolution evaluation")
      ->check(CLI::IsMember({"direct", "fft"}))
      ->capture_default_str();

  ConvergenceArgs conv;
  auto* v = app.add_subcommand("convergence", "Error and empirical order at a probe time");
  add_integrand_options(v, conv.f);
  v->add_option("--alpha", conv.alpha, "Integration order")->capture_default_str();
  v->add_option("--n-list", conv.n_list, "Grid sizes, comma separated")->delimiter(',')->required();
  v->add_option("--t-probe", conv.t_probe, "Probe time (grid end)")->capture_default_str();
  add_quadrature_options(v, conv.q);

  DielectricArgs diel;
  auto* e = app.add_subcommand("dielectric", "Susceptibility sweeps and time-domain polarization");
  e->add_option("--model", diel.model, "Response model")
      ->check(CLI::IsMember({"universal", "debye", "lorentz"}))
      ->capture_default_str();
  e->add_option("--n-exp", diel.n_exp, "Universal-law exponent n")->capture_default_str();
  e->add_option("--n-list", diel.n_list, "Exponents for --verify-ratio, comma separated")->delimiter(',');
  e->add_option("--scale", diel.scale, "Universal-law scale")->capture_default_str();
  e->add_option("--tau", diel.tau, "Debye relaxation time")->capture_default_str();
  e->add_option("--density", diel.density, "Number density")->capture_default_str();
  e->add_option("--coupling", diel.coupling, "Debye coupling constant")->capture_default_str();
  e->add_option("--eps0", diel.eps0, "Vacuum permittivity")->capture_default_str();
  e->add_option("--charge", diel.charge, "Lorentz electron charge")->capture_default_str();
  e->add_option("--mass", diel.mass, "Lorentz electron mass")->capture_default_str();
  e->add_option("--electrons", diel.electrons, "Lorentz electrons per molecule");
  e->add_option("--mode", diel.modes, "Lorentz mode f:omega:gamma (repeatable)");
  e->add_option("--omega-range", diel.omega_range, "Linear sweep start:stop:count");
  e->add_flag("--time-domain", diel.time_domain, "Emit t,E,P for E = e0 sin(omega0 t)");
  e->add_flag("--verify-ratio", diel.verify_ratio, "Recover chi''/chi' from a time-domain run");
  e->add_option("--omega0", diel.omega0, "Probe angular frequency")->capture_default_str();
  e->add_option("--dt", diel.dt, "Time step")->capture_default_str();
  e->add_option("--t-end", diel.t_end, "Run length")->capture_default_str();
  e->add_option("--e0", diel.e0, "Field amplitude")->capture_default_str();
  e->add_option("--scheme", diel.scheme, "Integral rule")
      ->check(CLI::IsMember({"gl", "nc0", "flmm-trap"}))
      ->capture_default_str();
  e->add_option("--method", diel.method, "Convolution evaluation")
      ->check(CLI::IsMember({"direct", "fft"}))
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex, out, err);
  } catch (const CLI::CallForAllHelp& ex) {
    return app.exit(ex, out, err);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex, out, err);
    return kExitUsage;
  }

  try {
    if (c->parsed()) cmd_coeffs(coeffs, out);
    if (i->parsed()) cmd_integrate(integ, out);
    if (d->parsed()) cmd_differentiate(diff, out);
    if (v->parsed()) cmd_convergence(conv, out);
    if (e->parsed()) cmd_dielectric(diel, out, err);
  } catch (const UsageError& ex) {
    err << "usage error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitRuntime;
  }
  out.flush();
  return kExitOk;
}

}  // namespace fracquad::cli
