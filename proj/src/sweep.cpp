#include "polsim/sweep.hpp"

#include "polsim/dephasing.hpp"
#include "polsim/discrete.hpp"
#include "polsim/entanglement.hpp"
#include "polsim/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <thread>

namespace polsim {
namespace {

const std::set<std::string> kDiscreteKeys{"lambda_pump_nm", "conversion_lambda_nm", "n_h", "n_v",
                                          "separation_nm", "tau_fs", "critical", "m",
                                          "x_min", "x_max", "x_steps"};

SweepSpec figure_base(Model model, double k, double fwhm) {
  SweepSpec s;
  s.model = model;
  s.lambda_pump_nm = 780.0;
  s.n_h = 1.51004;
  s.n_v = 1.54360;
  s.k = k;
  s.fwhm_nm = fwhm;
  s.separation_nm = 3.0;
  s.x_min = 0.0;
  s.x_max = model == Model::SinglePeak ? 2000.0 : 400.0;
  s.x_steps = 801;
  return s;
}

std::string label_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

SweepPoint evaluate_point(const Scenario& scenario, double x) {
  SweepPoint p;
  p.x = x;
  p.tau_fs = scenario.tau_at(x);
  if (const auto* d = std::get_if<DiscretePair>(&scenario.spectrum)) {
    p.rho = ideal_upconvert(evolve_discrete(p.tau_fs, d->omega1, d->omega2, scenario.medium));
  } else {
    p.rho = density_matrix(p.tau_fs, scenario.spectrum, scenario.medium);
  }
  p.concurrence = concurrence(p.rho);
  p.purity = purity(p.rho);
  return p;
}

std::vector<SweepPoint> sweep_points(const SweepSpec& spec, unsigned threads) {
  const Scenario scenario = make_scenario(spec);
  std::vector<SweepPoint> out(spec.x_steps);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, spec.x_steps);

  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (int i = static_cast<int>(t); i < spec.x_steps; i += static_cast<int>(threads))
            out[i] = evaluate_point(scenario, spec.x_at(i));
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::string csv_header(bool emit_elements) {
  std::string h = "x,tau_fs,concurrence,purity";
  if (emit_elements) {
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) {
        const std::string ij = std::to_string(i) + std::to_string(j);
        h += ",re_rho_" + ij + ",im_rho_" + ij;
      }
  }
  return h;
}

std::string csv_row(const SweepPoint& p, bool emit_elements) {
  std::string r = format_number(p.x) + ',' + format_number(p.tau_fs) + ',' +
                  format_number(p.concurrence) + ',' + format_number(p.purity);
  if (emit_elements) {
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j)
        r += ',' + format_number(p.rho(i, j).real()) + ',' + format_number(p.rho(i, j).imag());
  }
  return r;
}

void run_sweep(const SweepSpec& spec, std::ostream& out, unsigned threads) {
  const auto points = sweep_points(spec, threads);
  out << csv_header(spec.emit_elements) << '\n';
  for (const auto& p : points) out << csv_row(p, spec.emit_elements) << '\n';
}

std::vector<std::string> preset_names() { return {"fig3", "fig4", "fig5", "fig6"}; }

std::vector<Preset> figure_preset(const std::string& name) {
  std::vector<Preset> out;
  if (name == "fig3") {
    for (double f : {0.125, 0.25, 0.5})
      out.push_back({"fwhm" + label_number(f), figure_base(Model::DoublePeak, -1.0, f)});
  } else if (name == "fig4") {
    for (double k : {-0.999, -0.99, -0.9})
      out.push_back({"k" + label_number(k), figure_base(Model::DoublePeak, k, 0.5)});
  } else if (name == "fig5" || name == "fig6") {
    const double k = name == "fig5" ? -1.0 : -0.999;
    for (double f : {0.5, 1.0, 2.0})
      out.push_back({"fwhm" + label_number(f), figure_base(Model::SinglePeak, k, f)});
  } else {
    throw ConfigError("preset", "unknown preset '" + name + "' (expected fig3|fig4|fig5|fig6)");
  }
  return out;
}

DiscreteRequest discrete_request_from_config(const KeyValueConfig& cfg) {
  for (const auto& key : cfg.keys())
    if (!kDiscreteKeys.count(key)) throw ConfigError(key, "unknown key '" + key + "'");

  DiscreteRequest r;
  SweepSpec& s = r.base;
  s.model = Model::Discrete;
  s.lambda_pump_nm = cfg.number("lambda_pump_nm");
  s.conversion_lambda_nm = cfg.number_or("conversion_lambda_nm");
  s.n_h = cfg.number("n_h");
  s.n_v = cfg.number("n_v");
  s.separation_nm = cfg.number("separation_nm");
  s.x_min = cfg.number_or("x_min").value_or(0.0);
  s.x_max = cfg.number_or("x_max").value_or(400.0);
  s.x_steps = cfg.has("x_steps") ? static_cast<int>(cfg.integer("x_steps")) : 801;
  s.validate();

  if (cfg.has("tau_fs") && cfg.has("critical"))
    throw ConfigError("critical", "give either 'tau_fs' or 'critical', not both");
  if (cfg.has("tau_fs")) {
    r.tau_fs = cfg.number_list("tau_fs");
    for (double t : r.tau_fs)
      if (t < 0.0) throw ConfigError("tau_fs", "key 'tau_fs': times must be non-negative");
  }
  if (cfg.has("critical")) {
    const std::string c = cfg.raw("critical");
    if (c == "tau_c") r.critical = DiscreteRequest::Critical::TauC;
    else if (c == "tau_d") r.critical = DiscreteRequest::Critical::TauD;
    else throw ConfigError("critical", "key 'critical': expected tau_c|tau_d, got '" + c + "'");
    for (double m : cfg.has("m") ? cfg.number_list("m") : std::vector<double>{0.0}) {
      if (m < 0.0 || m != static_cast<int>(m))
        throw ConfigError("m", "key 'm': expected non-negative integers");
      r.m.push_back(static_cast<int>(m));
    }
  } else if (cfg.has("m")) {
    throw ConfigError("m", "key 'm' requires 'critical'");
  }
  return r;
}

std::vector<DiscretePoint> discrete_points(const DiscreteRequest& request) {
  const Scenario sc = make_scenario(request.base);
  const auto& pair = std::get<DiscretePair>(sc.spectrum);

  std::vector<double> taus = request.tau_fs;
  if (request.critical != DiscreteRequest::Critical::None) {
    for (int m : request.m) {
      const auto ct = critical_times(pair.omega1, pair.omega2, sc.medium, m);
      taus.push_back(request.critical == DiscreteRequest::Critical::TauC ? ct.tau_c : ct.tau_d);
    }
  }
  if (taus.empty()) {
    for (int i = 0; i < request.base.x_steps; ++i) taus.push_back(sc.tau_at(request.base.x_at(i)));
  }

  std::vector<DiscretePoint> out;
  for (double tau : taus) {
    const auto state = evolve_discrete(tau, pair.omega1, pair.omega2, sc.medium);
    const auto rho = ideal_upconvert(state);
    out.push_back({tau, time_to_path_difference(tau, sc.medium, sc.units), concurrence(rho), purity(rho),
                   psi1_residual(state)});
  }
  return out;
}

void run_discrete(const DiscreteRequest& request, std::ostream& out) {
  out << "tau_fs,x,concurrence,purity,psi1_residual\n";
  for (const auto& p : discrete_points(request))
    out << format_number(p.tau_fs) << ',' << format_number(p.x) << ',' << format_number(p.concurrence)
        << ',' << format_number(p.purity) << ',' << format_number(p.psi1_residual) << '\n';
}

}  // namespace polsim
