#include "polsim/config.hpp"
#include "polsim/entanglement.hpp"
#include "polsim/errors.hpp"
#include "polsim/sweep.hpp"

#include <doctest.h>

#include <sstream>

using namespace polsim;

namespace {

KeyValueConfig parse(const std::string& text) {
  std::istringstream in(text);
  return KeyValueConfig::parse(in);
}

const std::string kBase =
    "lambda_pump_nm = 780\nn_h = 1.51004\nn_v = 1.54360\nk = -1\nfwhm_nm = 0.5\nseparation_nm = 3\n";

// Base config with `extra` lines overriding or adding keys.
std::string with(const std::string& extra) {
  std::string out;
  std::istringstream base(kBase);
  for (std::string line; std::getline(base, line);) {
    const std::string key = line.substr(0, line.find(' '));
    if (extra.find(key + " =") == std::string::npos) out += line + "\n";
  }
  return out + extra;
}

std::string config_error_key(const std::string& text) {
  try {
    sweep_spec_from_config(parse(with(text)));
  } catch (const ConfigError& e) {
    return e.key();
  }
  return "";
}

}  // namespace

TEST_CASE("key = value parsing") {
  const auto cfg = parse("# comment\n  k = -0.99   # trailing\n\nfwhm_nm=0.25\nlist = 1, 2,3\n");
  CHECK(cfg.number("k") == -0.99);
  CHECK(cfg.number("fwhm_nm") == 0.25);
  CHECK(cfg.number_list("list") == std::vector<double>{1, 2, 3});
  CHECK_FALSE(cfg.has("x_max"));
  CHECK_FALSE(cfg.number_or("x_max"));

  CHECK_THROWS_AS(parse("k = 1\nk = 2\n"), ConfigError);
  CHECK_THROWS_AS(parse("no equals sign\n"), ConfigError);
  try {
    parse("k = abc\n").number("k");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.key() == "k");
  }
}

TEST_CASE("sweep spec validation names the key") {
  CHECK(config_error_key("model = double_peak\nk = 1.5\n") == "k");
  CHECK(config_error_key("model = double_peak\nfwhm_nm = -1\n") == "fwhm_nm");
  CHECK(config_error_key("model = double_peak\nx_steps = 1\n") == "x_steps");
  CHECK(config_error_key("model = double_peak\nn_h = 1.6\nn_v = 1.5\n") == "n_v");
  CHECK(config_error_key("model = triple_peak\n") == "model");
  CHECK(config_error_key("model = double_peak\nbogus = 1\n") == "bogus");
  CHECK(config_error_key("model = double_peak\n") == "");
  CHECK_THROWS_AS(sweep_spec_from_config(parse("model = double_peak\nk = 0\n")), ConfigError);
}

TEST_CASE("defaults") {
  const auto d = sweep_spec_from_config(parse(with("model = double_peak\n")));
  CHECK(d.x_max == 400.0);
  CHECK(d.x_steps == 801);
  CHECK(d.conversion_lambda() == 1560.0);
  const auto s = sweep_spec_from_config(parse(with("model = single_peak\n")));
  CHECK(s.x_max == 2000.0);
}

TEST_CASE("scenario puts the peaks symmetrically around omega0/2") {
  const auto sc = make_scenario(figure_preset("fig3")[0].spec);
  const auto& d = std::get<DoublePeak>(sc.spectrum);
  CHECK(d.omega0() == doctest::Approx(sc.units.omega_pump()).epsilon(1e-15));
  CHECK(d.separation() == doctest::Approx(wavelength_span_to_omega(3.0, 1560.0)).epsilon(1e-12));
}

TEST_CASE("presets") {
  CHECK(preset_names().size() == 4);
  CHECK(figure_preset("fig4").size() == 3);
  CHECK(figure_preset("fig4")[0].label == "k-0.999");
  CHECK(figure_preset("fig3")[0].label == "fwhm0.125");
  CHECK_THROWS_AS(figure_preset("fig7"), ConfigError);
  const auto a = figure_preset("fig6");
  const auto b = figure_preset("fig6");
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].spec.k == b[i].spec.k);
}

TEST_CASE("sweep output is independent of the thread count") {
  auto spec = figure_preset("fig4")[1].spec;
  spec.x_steps = 97;
  spec.emit_elements = true;
  std::ostringstream one, many;
  run_sweep(spec, one, 1);
  run_sweep(spec, many, 7);
  CHECK(one.str() == many.str());
  std::istringstream lines(one.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header == csv_header(true));
  CHECK(header.rfind("x,tau_fs,concurrence,purity,re_rho_00,im_rho_00", 0) == 0);
  int rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  CHECK(rows == 97);
}

TEST_CASE("number formatting") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(260.0) == "260");
}

TEST_CASE("discrete requests") {
  const std::string base = "lambda_pump_nm = 780\nn_h = 1.51004\nn_v = 1.54360\nseparation_nm = 3\n";
  auto r = discrete_request_from_config(parse(base + "critical = tau_d\nm = 0, 1, 2\n"));
  auto pts = discrete_points(r);
  REQUIRE(pts.size() == 3);
  for (const auto& p : pts) {
    CHECK(p.concurrence == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(p.psi1_residual < 1e-12);
  }
  CHECK(pts[0].x == doctest::Approx(260.0).epsilon(1e-12));

  r = discrete_request_from_config(parse(base + "critical = tau_c\nm = 1\n"));
  CHECK(discrete_points(r).at(0).concurrence < 1e-10);

  r = discrete_request_from_config(parse(base + "tau_fs = 0, 40314.5\n"));
  CHECK(discrete_points(r).size() == 2);

  try {
    discrete_request_from_config(parse(base + "critical = tau_x\n"));
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.key() == "critical");
  }
  CHECK_THROWS_AS(discrete_request_from_config(parse(base + "m = 1\n")), ConfigError);
  CHECK_THROWS_AS(discrete_request_from_config(parse("n_h = 1.5\n")), ConfigError);
}
