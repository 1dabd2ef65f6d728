#pragma once

// Path-difference sweeps, figure presets and discrete-protocol runs with CSV
// output.

#include "polsim/config.hpp"
#include "polsim/polarization.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace polsim {

struct SweepPoint {
  double x = 0.0;
  double tau_fs = 0.0;
  double concurrence = 0.0;
  double purity = 0.0;
  PolarizationMatrix rho;
};

/// Closed-form (or ideal discrete) state at path difference x.
SweepPoint evaluate_point(const Scenario& scenario, double x);

/// Every grid point in ascending x. Points are computed on `threads` workers
/// (0 = hardware concurrency); the result does not depend on scheduling.
std::vector<SweepPoint> sweep_points(const SweepSpec& spec, unsigned threads = 0);

std::string csv_header(bool emit_elements);
std::string csv_row(const SweepPoint& p, bool emit_elements);

/// Header plus one row per grid point. Numbers use 17 significant digits.
void run_sweep(const SweepSpec& spec, std::ostream& out, unsigned threads = 0);

struct Preset {
  std::string label;  ///< e.g. "fwhm0.125"
  SweepSpec spec;
};

/// Curves of fig3 | fig4 | fig5 | fig6. Throws ConfigError for other names.
std::vector<Preset> figure_preset(const std::string& name);
std::vector<std::string> preset_names();

/// Discrete-protocol request: explicit times, critical times, or an x grid.
struct DiscreteRequest {
  SweepSpec base;  ///< model discrete; grid used when no times are given
  std::vector<double> tau_fs;
  enum class Critical { None, TauC, TauD } critical = Critical::None;
  std::vector<int> m;
};

DiscreteRequest discrete_request_from_config(const KeyValueConfig& cfg);

struct DiscretePoint {
  double tau_fs;
  double x;
  double concurrence;
  double purity;
  double psi1_residual;
};

std::vector<DiscretePoint> discrete_points(const DiscreteRequest& request);

/// Columns tau_fs,x,concurrence,purity,psi1_residual.
void run_discrete(const DiscreteRequest& request, std::ostream& out);

std::string format_number(double v);

}  // namespace polsim
