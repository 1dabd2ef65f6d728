#include "polsim/validate.hpp"

#include "polsim/dephasing.hpp"
#include "polsim/discrete.hpp"
#include "polsim/entanglement.hpp"
#include "polsim/erasure.hpp"
#include "polsim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace polsim {
namespace {

std::string element_name(PolPair r, PolPair c) { return "<" + to_string(r) + "|rho|" + to_string(c) + ">"; }

CheckResult bounded(std::string name, double value, double tol, std::string detail = {}) {
  return {std::move(name), value <= tol, value, tol, std::move(detail)};
}

QuadratureSpec spec_for(double tau, const Scenario& sc, const ValidateOptions& opts) {
  QuadratureSpec q;
  q.scheme = opts.scheme;
  q.order = opts.order ? *opts.order : std::max(64, required_order(tau, sc.spectrum, sc.medium, q));
  return q;
}

void check_oracle_presets(const ValidateOptions& opts, std::vector<CheckResult>& out) {
  for (auto [name, spec] : oracle_presets()) {
    if (opts.k) spec.k = *opts.k;
    const std::string check = "oracle:" + name;
    try {
      const Scenario sc = make_scenario(spec);
      const auto xs = oracle_path_differences(sc, spec.x_max);
      const auto cmp = compare_with_oracle(sc, xs, opts);
      std::ostringstream d;
      d << "worst " << element_name(cmp.row, cmp.col) << " at x=" << format_number(cmp.x)
        << " order=" << cmp.order_used;
      out.push_back(bounded(check, cmp.max_relative_error, opts.tol, d.str()));
    } catch (const std::exception& e) {
      out.push_back({check, false, NAN, opts.tol, e.what()});
    }
  }
}

void check_state_validity(std::vector<CheckResult>& out) {
  for (const auto& preset : preset_names()) {
    for (const auto& curve : figure_preset(preset)) {
      double herm = 0.0, trace = 0.0, min_eig = 1.0;
      for (const auto& p : sweep_points(curve.spec)) {
        const auto d = p.rho.diagnostics();
        herm = std::max(herm, d.hermiticity_error);
        trace = std::max(trace, d.trace_error);
        min_eig = std::min(min_eig, d.min_eigenvalue);
      }
      const std::string base = "state:" + preset + "/" + curve.label;
      out.push_back(bounded(base + "/hermiticity", herm, 1e-12));
      out.push_back(bounded(base + "/trace", trace, 1e-12));
      out.push_back(bounded(base + "/psd", -min_eig, 1e-10, "min eigenvalue " + format_number(min_eig)));
    }
  }
}

void check_concurrence_anchors(std::vector<CheckResult>& out) {
  Vector4c bell = Vector4c::Zero();
  bell(0) = bell(3) = 1.0 / std::numbers::sqrt2;
  const auto bell_rho = PolarizationMatrix::from_pure(bell);
  const PolarizationMatrix mixed(Matrix4c::Identity() / 4.0);
  const PolarizationMatrix werner(0.5 * bell_rho.matrix() + 0.5 * mixed.matrix());
  out.push_back(bounded("concurrence:bell", std::abs(concurrence(bell_rho) - 1.0), 1e-10));
  out.push_back(bounded("concurrence:maximally_mixed", std::abs(concurrence(mixed)), 1e-10));
  out.push_back(bounded("concurrence:werner_p0.5", std::abs(concurrence(werner) - 0.25), 1e-10));
}

void check_discrete(std::vector<CheckResult>& out) {
  const Scenario sc = make_scenario(figure_preset("fig3").front().spec);
  const auto& dp = std::get<DoublePeak>(sc.spectrum);
  double dev_d = 0.0, dev_c = 0.0, residual = 0.0;
  for (int m = 0; m < 3; ++m) {
    const auto ct = critical_times(dp.omega1, dp.omega2, sc.medium, m);
    const auto sd = evolve_discrete(ct.tau_d, dp.omega1, dp.omega2, sc.medium);
    const auto scn = evolve_discrete(ct.tau_c, dp.omega1, dp.omega2, sc.medium);
    dev_d = std::max(dev_d, std::abs(concurrence(ideal_upconvert(sd)) - 1.0));
    dev_c = std::max(dev_c, concurrence(ideal_upconvert(scn)));
    residual = std::max(residual, psi1_residual(sd));
  }
  out.push_back(bounded("discrete:tau_d_concurrence", dev_d, 1e-10));
  out.push_back(bounded("discrete:tau_c_concurrence", dev_c, 1e-10));
  out.push_back(bounded("discrete:psi1_cancellation", residual, 1e-12));
}

void check_reduction(std::vector<CheckResult>& out) {
  const Medium medium{1.51004, 1.54360};
  double worst = 0.0;
  int sample = 0;
  for (double k : {-1.0, -0.999, -0.9, 0.0}) {
    for (double tau : {0.0, 5e3, 4e4, 2e5}) {
      const double omega0 = 2.415;
      const double delta = 1.6e-4 * (1 + sample++ % 3);
      const auto single = density_matrix(tau, SinglePeak{omega0, delta, k}, medium);
      const auto dbl = density_matrix(tau, DoublePeak{0.5 * omega0, 0.5 * omega0 + 0.0, delta, k}, medium);
      worst = std::max(worst, (single.matrix() - dbl.matrix()).cwiseAbs().maxCoeff());
    }
  }
  out.push_back(bounded("closed_form:double_to_single_reduction", worst, 1e-12));
}

void check_erasure(std::vector<CheckResult>& out) {
  const double detuning = 1e-3;
  double prev = 0.0;
  bool monotone = true;
  for (double factor : {0.5, 1.0, 2.0, 5.0, 10.0, 100.0}) {
    const double r = wide_pump_ratio(detuning, Pump{factor * detuning, 0.0});
    monotone = monotone && r > prev;
    prev = r;
  }
  const double at10 = wide_pump_ratio(detuning, Pump{10.0 * detuning, 0.0});
  out.push_back({"erasure:wide_pump_ratio_monotone", monotone, monotone ? 1.0 : 0.0, 1.0, ""});
  out.push_back({"erasure:wide_pump_ratio_at_10sigma", at10 >= 0.995, at10, 0.995, ">= bound"});
}

void check_convergence(const ValidateOptions& opts, std::vector<CheckResult>& out) {
  auto [name, spec] = oracle_presets()[3];  // fig4 k=-0.999
  const Scenario sc = make_scenario(spec);
  const double tau = sc.tau_at(oracle_path_differences(sc, spec.x_max).back());
  try {
    QuadratureSpec q = spec_for(tau, sc, opts);
    const auto base = full_matrix_quadrature(tau, sc.spectrum, sc.medium, std::nullopt, q);
    q.order *= 2;
    const auto fine = full_matrix_quadrature(tau, sc.spectrum, sc.medium, std::nullopt, q);
    const double drift = (fine.unnormalized - base.unnormalized).cwiseAbs().maxCoeff();
    out.push_back(bounded("oracle:order_doubling/" + name, drift, 1e-7));
  } catch (const std::exception& e) {
    out.push_back({"oracle:order_doubling/" + name, false, NAN, 1e-7, e.what()});
  }
}

}  // namespace

double relative_element_error(cplx oracle, cplx closed) {
  return std::abs(oracle - closed) / std::max(std::abs(closed), kRelativeErrorFloor);
}

std::vector<double> oracle_path_differences(const Scenario& sc, double x_max, int count) {
  const double delta = delta_of(sc.spectrum);
  const double k = k_of(sc.spectrum);
  double rate = 0.0;
  for (PolPair p : kBasis) {
    const double na = index_of(p.a, sc.medium);
    const double nb = index_of(p.b, sc.medium);
    rate = std::max(rate, na * na + 2.0 * k * na * nb + nb * nb);
  }
  double x_cap = x_max;
  if (rate > 0.0) {
    const double tau_cap = std::sqrt(kOracleMaxDamping / rate) / delta;
    x_cap = std::min(x_max, time_to_path_difference(tau_cap, sc.medium, sc.units));
  }
  std::vector<double> xs;
  for (int i = 0; i < count; ++i) xs.push_back(x_cap * i / (count - 1));
  return xs;
}

OracleComparison compare_with_oracle(const Scenario& sc, const std::vector<double>& xs,
                                     const ValidateOptions& opts) {
  OracleComparison worst;
  worst.max_relative_error = -1.0;
  for (double x : xs) {
    const double tau = sc.tau_at(x);
    const QuadratureSpec q = spec_for(tau, sc, opts);
    const auto quad = full_matrix_quadrature(tau, sc.spectrum, sc.medium, std::nullopt, q);
    Matrix4c closed = closed_form_matrix(tau, sc.spectrum, sc.medium);
    if (opts.inject_fault) {
      const auto [r, c] = *opts.inject_fault;
      const cplx bad = closed(r.index(), c.index()) * (1.0 + 1e-3) + 1e-4;
      closed(r.index(), c.index()) = bad;
      if (r.index() != c.index()) closed(c.index(), r.index()) = std::conj(bad);
    }
    for (PolPair r : kBasis) {
      for (PolPair c : kBasis) {
        const double e = relative_element_error(quad.unnormalized(r.index(), c.index()),
                                                closed(r.index(), c.index()));
        if (e > worst.max_relative_error) worst = {e, r, c, x, q.order};
      }
    }
  }
  return worst;
}

std::vector<std::pair<std::string, SweepSpec>> oracle_presets() {
  std::vector<std::pair<std::string, SweepSpec>> out;
  for (const auto& preset : preset_names()) {
    for (auto curve : figure_preset(preset)) {
      if (curve.spec.k <= -1.0) curve.spec.k = -0.999;
      out.emplace_back(preset + "/" + curve.label, curve.spec);
    }
  }
  return out;
}

std::vector<CheckResult> run_validate(const ValidateOptions& opts) {
  if (opts.k && !(std::abs(*opts.k) < 1.0))
    throw ConfigError("k", "k = " + format_number(*opts.k) +
                               " is unsupported by the quadrature oracle (singular covariance at |k| = 1); "
                               "use e.g. k = -0.99999");
  std::vector<CheckResult> out;
  check_oracle_presets(opts, out);
  check_convergence(opts, out);
  check_state_validity(out);
  check_concurrence_anchors(out);
  check_discrete(out);
  check_reduction(out);
  check_erasure(out);
  return out;
}

void write_report(const std::vector<CheckResult>& results, std::ostream& out) {
  out << "check,status,value,tolerance,detail\n";
  for (const auto& r : results) {
    std::string detail = r.detail;
    std::replace(detail.begin(), detail.end(), ',', ';');
    out << r.name << ',' << (r.passed ? "PASS" : "FAIL") << ',' << format_number(r.value) << ','
        << format_number(r.tolerance) << ',' << detail << '\n';
  }
}

}  // namespace polsim
