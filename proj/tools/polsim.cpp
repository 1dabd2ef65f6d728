// polsim: sweeps, presets, discrete runs and self-validation.

#include "polsim/errors.hpp"
#include "polsim/spectra.hpp"
#include "polsim/sweep.hpp"
#include "polsim/validate.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

// Opens --out if given, otherwise stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw polsim::ConfigError("out", "cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string curve_path(const std::string& out, const std::string& label) {
  const std::filesystem::path p(out);
  const std::string ext = p.has_extension() ? p.extension().string() : ".csv";
  return (p.parent_path() / (p.stem().string() + "_" + label + ext)).string();
}

void warn_if_overlapping(const polsim::SweepSpec& spec) {
  const auto sc = polsim::make_scenario(spec);
  if (!polsim::well_separated(sc.spectrum))
    std::cerr << "warning: peak separation below " << polsim::kWellSeparatedDeltas
              << " delta; closed forms assume well separated peaks\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polarization entanglement from frequency entanglement via local dephasing and upconversion"};
  app.require_subcommand(1);

  std::string config_path, out_path, preset_name, fault;
  auto* sweep = app.add_subcommand("sweep", "Concurrence vs path difference from a config file");
  sweep->add_option("--config", config_path, "key = value config file")->required();
  sweep->add_option("--out", out_path, "CSV output file (default stdout)");

  auto* discrete = app.add_subcommand("discrete", "Ideal discrete-colour protocol");
  discrete->add_option("--config", config_path, "key = value config file")->required();
  discrete->add_option("--out", out_path, "CSV output file (default stdout)");

  auto* preset = app.add_subcommand("preset", "Figure presets fig3|fig4|fig5|fig6");
  preset->add_option("name", preset_name, "preset name")->required()->check(
      CLI::IsMember({"fig3", "fig4", "fig5", "fig6"}));
  preset->add_option("--out", out_path,
                     "CSV output; one file per curve named <stem>_<curve><ext> (default stdout)");

  polsim::ValidateOptions vopts;
  int order = 0;
  double k_override = 0.0;
  std::string scheme = "trapezoid";
  auto* validate = app.add_subcommand("validate", "Closed forms vs quadrature oracle and invariant checks");
  auto* order_opt = validate->add_option("--order", order, "fixed quadrature order per axis")
                        ->check(CLI::PositiveNumber);
  validate->add_option("--tol", vopts.tol, "oracle relative tolerance")->capture_default_str();
  auto* k_opt = validate->add_option("--k", k_override, "override k in the oracle comparisons");
  validate->add_option("--scheme", scheme, "trapezoid|gauss_hermite")
      ->check(CLI::IsMember({"trapezoid", "gauss_hermite"}))
      ->capture_default_str();
  validate->add_option("--inject-fault", fault, "test hook: corrupt one closed-form element, e.g. HV,VH")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitConfig;
  }

  try {
    if (*sweep) {
      const auto spec = polsim::sweep_spec_from_config(polsim::KeyValueConfig::parse_file(config_path));
      warn_if_overlapping(spec);
      Output out(out_path);
      polsim::run_sweep(spec, out.stream());
    } else if (*discrete) {
      const auto req =
          polsim::discrete_request_from_config(polsim::KeyValueConfig::parse_file(config_path));
      Output out(out_path);
      polsim::run_discrete(req, out.stream());
    } else if (*preset) {
      const auto curves = polsim::figure_preset(preset_name);
      for (const auto& c : curves) {
        if (out_path.empty()) {
          std::cout << "# " << preset_name << " " << c.label << '\n';
          polsim::run_sweep(c.spec, std::cout);
        } else {
          Output out(curve_path(out_path, c.label));
          polsim::run_sweep(c.spec, out.stream());
        }
      }
    } else if (*validate) {
      if (*order_opt) vopts.order = order;
      if (*k_opt) vopts.k = k_override;
      if (scheme == "gauss_hermite") vopts.scheme = polsim::QuadratureScheme::GaussHermite;
      if (!fault.empty()) {
        const auto comma = fault.find(',');
        if (comma == std::string::npos)
          throw polsim::ConfigError("inject-fault", "expected ROW,COL such as HV,VH");
        try {
          vopts.inject_fault = {polsim::parse_pol_pair(fault.substr(0, comma)),
                                polsim::parse_pol_pair(fault.substr(comma + 1))};
        } catch (const std::invalid_argument& e) {
          throw polsim::ConfigError("inject-fault", e.what());
        }
      }
      const auto results = polsim::run_validate(vopts);
      polsim::write_report(results, std::cout);
      const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
      return ok ? 0 : kExitNumerical;
    }
  } catch (const polsim::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return 0;
}
