#include "polsim/config.hpp"

#include "polsim/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace polsim {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw ConfigError(key, "key '" + key + "': expected a number, got '" + t + "'");
  return v;
}

const std::set<std::string> kSweepKeys{
    "model", "lambda_pump_nm", "conversion_lambda_nm", "n_h", "n_v", "k", "fwhm_nm",
    "separation_nm", "x_min", "x_max", "x_steps", "emit_elements"};

}  // namespace

std::string to_string(Model m) {
  switch (m) {
    case Model::SinglePeak: return "single_peak";
    case Model::DoublePeak: return "double_peak";
    case Model::Discrete: return "discrete";
  }
  return "?";
}

KeyValueConfig KeyValueConfig::parse(std::istream& in) {
  KeyValueConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("", "line " + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw ConfigError("", "line " + std::to_string(lineno) + ": empty key");
    if (cfg.has(key)) throw ConfigError(key, "duplicate key '" + key + "'");
    cfg.values_[key] = trim(line.substr(eq + 1));
  }
  return cfg;
}

KeyValueConfig KeyValueConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open config file '" + path + "'");
  return parse(in);
}

const std::string& KeyValueConfig::raw(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError(key, "missing required key '" + key + "'");
  return it->second;
}

double KeyValueConfig::number(const std::string& key) const { return parse_double(key, raw(key)); }

std::optional<double> KeyValueConfig::number_or(const std::string& key) const {
  if (!has(key)) return std::nullopt;
  return number(key);
}

long KeyValueConfig::integer(const std::string& key) const {
  const std::string t = trim(raw(key));
  long v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw ConfigError(key, "key '" + key + "': expected an integer, got '" + t + "'");
  return v;
}

bool KeyValueConfig::flag(const std::string& key, bool fallback) const {
  if (!has(key)) return fallback;
  std::string v = raw(key);
  std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError(key, "key '" + key + "': expected true/false, got '" + v + "'");
}

std::vector<double> KeyValueConfig::number_list(const std::string& key) const {
  std::vector<double> out;
  std::stringstream ss(raw(key));
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(key, item));
  if (out.empty()) throw ConfigError(key, "key '" + key + "': empty list");
  return out;
}

std::vector<std::string> KeyValueConfig::keys() const {
  std::vector<std::string> k;
  for (const auto& [key, _] : values_) k.push_back(key);
  return k;
}

void SweepSpec::validate() const {
  auto fail = [](const std::string& key, const std::string& why) {
    throw ConfigError(key, "key '" + key + "': " + why);
  };
  if (!(lambda_pump_nm > 0.0)) fail("lambda_pump_nm", "must be positive");
  if (conversion_lambda_nm && !(*conversion_lambda_nm > 0.0)) fail("conversion_lambda_nm", "must be positive");
  if (!(n_h > 0.0)) fail("n_h", "must be positive");
  if (!(n_v > 0.0)) fail("n_v", "must be positive");
  if (!(n_v > n_h)) fail("n_v", "must exceed n_h (path difference needs n_V > n_H)");
  if (model != Model::Discrete) {
    if (!(std::abs(k) <= 1.0)) fail("k", "must satisfy -1 <= k <= 1");
    if (!(fwhm_nm > 0.0)) fail("fwhm_nm", "must be positive");
  }
  if (model != Model::SinglePeak && !(separation_nm > 0.0)) fail("separation_nm", "must be positive");
  if (!(x_min >= 0.0)) fail("x_min", "must be >= 0");
  if (!(x_max > x_min)) fail("x_max", "must exceed x_min");
  if (x_steps < 2) fail("x_steps", "must be >= 2");
}

SweepSpec sweep_spec_from_config(const KeyValueConfig& cfg) {
  for (const auto& key : cfg.keys())
    if (!kSweepKeys.count(key)) throw ConfigError(key, "unknown key '" + key + "'");

  SweepSpec s;
  const std::string model = cfg.raw("model");
  if (model == "single_peak") s.model = Model::SinglePeak;
  else if (model == "double_peak") s.model = Model::DoublePeak;
  else if (model == "discrete") s.model = Model::Discrete;
  else throw ConfigError("model", "key 'model': expected single_peak|double_peak|discrete, got '" + model + "'");

  s.lambda_pump_nm = cfg.number("lambda_pump_nm");
  s.conversion_lambda_nm = cfg.number_or("conversion_lambda_nm");
  s.n_h = cfg.number("n_h");
  s.n_v = cfg.number("n_v");
  if (s.model != Model::Discrete) {
    s.k = cfg.number("k");
    s.fwhm_nm = cfg.number("fwhm_nm");
  }
  if (s.model != Model::SinglePeak) s.separation_nm = cfg.number("separation_nm");

  s.x_min = cfg.number_or("x_min").value_or(0.0);
  s.x_max = cfg.number_or("x_max").value_or(s.model == Model::SinglePeak ? 2000.0 : 400.0);
  s.x_steps = cfg.has("x_steps") ? static_cast<int>(cfg.integer("x_steps")) : 801;
  s.emit_elements = cfg.flag("emit_elements", false);
  s.validate();
  return s;
}

Scenario make_scenario(const SweepSpec& spec) {
  spec.validate();
  const UnitContext units(spec.lambda_pump_nm);
  const Medium medium{spec.n_h, spec.n_v};
  const double omega0 = units.omega_pump();
  const double conv = spec.conversion_lambda();

  JointSpectrum spectrum;
  if (spec.model == Model::SinglePeak) {
    spectrum = SinglePeak{omega0, fwhm_nm_to_sigma(spec.fwhm_nm, conv), spec.k};
  } else {
    const double sep = wavelength_span_to_omega(spec.separation_nm, conv);
    const double lo = 0.5 * (omega0 - sep);
    const double hi = 0.5 * (omega0 + sep);
    if (spec.model == Model::DoublePeak)
      spectrum = DoublePeak{lo, hi, fwhm_nm_to_sigma(spec.fwhm_nm, conv), spec.k};
    else
      spectrum = DiscretePair{lo, hi};
  }
  validate(spectrum);
  return {medium, units, spectrum};
}

}  // namespace polsim
