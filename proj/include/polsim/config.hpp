#pragma once

// Flat `key = value` configuration and the sweep description it produces.

#include "polsim/spectra.hpp"
#include "polsim/units.hpp"

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polsim {

enum class Model { SinglePeak, DoublePeak, Discrete };

std::string to_string(Model m);

/// Parsed `key = value` pairs; `#` starts a comment. Duplicate keys and lines
/// without `=` throw ConfigError.
class KeyValueConfig {
 public:
  static KeyValueConfig parse(std::istream& in);
  static KeyValueConfig parse_file(const std::string& path);

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  const std::string& raw(const std::string& key) const;
  double number(const std::string& key) const;
  std::optional<double> number_or(const std::string& key) const;
  long integer(const std::string& key) const;
  bool flag(const std::string& key, bool fallback) const;
  std::vector<double> number_list(const std::string& key) const;
  std::vector<std::string> keys() const;

  void set(const std::string& key, const std::string& value) { values_[key] = value; }

 private:
  std::map<std::string, std::string> values_;
};

/// Grid over dimensionless path difference plus model parameters.
struct SweepSpec {
  Model model = Model::DoublePeak;
  double lambda_pump_nm = 780.0;
  std::optional<double> conversion_lambda_nm;  ///< default 2 * lambda_pump_nm
  double n_h = 1.51004;
  double n_v = 1.54360;
  double k = -1.0;
  double fwhm_nm = 0.5;
  double separation_nm = 3.0;
  double x_min = 0.0;
  double x_max = 400.0;
  int x_steps = 801;
  bool emit_elements = false;

  double conversion_lambda() const { return conversion_lambda_nm.value_or(2.0 * lambda_pump_nm); }
  /// Throws ConfigError naming the offending key.
  void validate() const;
  double x_at(int i) const { return x_min + (x_max - x_min) * i / (x_steps - 1); }
};

SweepSpec sweep_spec_from_config(const KeyValueConfig& cfg);

/// Physical objects resolved from a SweepSpec.
struct Scenario {
  Medium medium;
  UnitContext units;
  JointSpectrum spectrum;

  double tau_at(double x) const { return path_difference_to_time(x, medium, units); }
};

Scenario make_scenario(const SweepSpec& spec);

}  // namespace polsim
