#include "polsim/dephasing.hpp"
#include "polsim/discrete.hpp"
#include "polsim/entanglement.hpp"
#include "polsim/errors.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace polsim;

TEST_CASE("dephasing phase") {
  const Medium m = test::quartz_medium();
  CHECK(dephasing_phase(Pol::H, Pol::V, 1.2, 1.3, 0.0, m) == cplx(1.0, 0.0));
  const cplx hh = dephasing_phase(Pol::H, Pol::H, 1.2, 1.3, 17.0, m);
  CHECK(std::abs(hh - std::polar(1.0, 17.0 * m.n_h * 2.5)) < 1e-12);
  CHECK(std::abs(std::abs(dephasing_phase(Pol::V, Pol::H, 1.1, 1.4, 1e4, m)) - 1.0) < 1e-15);
}

TEST_CASE("every element equals 2 at tau = 0") {
  const Medium m = test::quartz_medium();
  for (const JointSpectrum& s : {JointSpectrum{DoublePeak{1.2, 1.21, 1e-3, -0.9}},
                                 JointSpectrum{SinglePeak{2.41, 2e-3, 0.3}}}) {
    const Matrix4c raw = closed_form_matrix(0.0, s, m);
    CHECK((raw - Matrix4c::Constant(2.0)).cwiseAbs().maxCoeff() < 1e-15);
    const auto rho = density_matrix(0.0, s, m);
    CHECK((rho.matrix() - Matrix4c::Constant(0.25)).cwiseAbs().maxCoeff() < 1e-15);
  }
}

TEST_CASE("k = -1 keeps the HH/VV sector fixed") {
  const Scenario sc = test::preset_scenario("fig3", 2);
  for (double x : {0.0, 13.0, 100.0, 260.0, 399.0}) {
    const double tau = sc.tau_at(x);
    CHECK(std::abs(closed_form_element(HH, HH, tau, sc.spectrum, sc.medium) - 2.0) < 1e-12);
    CHECK(std::abs(closed_form_element(VV, VV, tau, sc.spectrum, sc.medium) - 2.0) < 1e-12);
    CHECK(std::abs(std::abs(closed_form_element(HH, VV, tau, sc.spectrum, sc.medium)) - 2.0) < 1e-12);
  }
}

TEST_CASE("HV population is (1 + cos) times a Gaussian damping and vanishes at every tau_d") {
  const Scenario sc = test::preset_scenario("fig3", 1);
  const auto& d = std::get<DoublePeak>(sc.spectrum);
  const double clock = sc.medium.delta_n() * d.separation();
  // log(element / (1 + cos)) / tau^2 is the same at every tau
  std::vector<double> rates;
  for (double x : {10.0, 123.0, 301.0}) {
    const double t = sc.tau_at(x);
    const double e = closed_form_element(HV, HV, t, sc.spectrum, sc.medium).real();
    rates.push_back(std::log(e / (1 + std::cos(t * clock))) / (t * t));
  }
  CHECK(rates[0] < 0.0);
  CHECK(rates[1] == doctest::Approx(rates[0]).epsilon(1e-9));
  CHECK(rates[2] == doctest::Approx(rates[0]).epsilon(1e-9));
  for (int m = 0; m < 3; ++m) {
    const double td = critical_times(d.omega1, d.omega2, sc.medium, m).tau_d;
    CHECK(std::abs(closed_form_element(HV, HV, td, sc.spectrum, sc.medium)) < 1e-12);
    CHECK(std::abs(closed_form_element(HH, HV, td, sc.spectrum, sc.medium)) < 1e-12);
    CHECK(std::abs(closed_form_element(VH, VV, td, sc.spectrum, sc.medium)) < 1e-12);
  }
}

TEST_CASE("Bell state at tau_d for k = -1") {
  const Scenario sc = test::preset_scenario("fig3", 0);
  const auto& d = std::get<DoublePeak>(sc.spectrum);
  const double td = critical_times(d.omega1, d.omega2, sc.medium, 0).tau_d;
  const auto rho = density_matrix(td, sc.spectrum, sc.medium);
  CHECK(rho(HH, HH).real() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rho(VV, VV).real() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(rho(HH, VV)) == doctest::Approx(0.5).epsilon(1e-12));
  for (PolPair p : {HV, VH})
    for (PolPair q : kBasis) CHECK(std::abs(rho(p, q)) < 1e-12);
  CHECK(concurrence(rho) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("single peak k = -1 approaches the Bell limit monotonically") {
  const Scenario sc = test::preset_scenario("fig5", 1);
  double prev = -1.0;
  for (double x = 0.0; x <= 4000.0; x += 50.0) {
    const double c = concurrence(density_matrix(sc.tau_at(x), sc.spectrum, sc.medium));
    CHECK(c >= prev - 1e-9);
    prev = c;
  }
  CHECK(prev > 0.999);
}

TEST_CASE("double peak with Omega1 = Omega2 reduces to single peak") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> k(-0.999, 0.999), dl(1e-4, 3e-3), tau(0.0, 5e4);
  const Medium m = test::quartz_medium();
  for (int i = 0; i < 20; ++i) {
    const double w0 = 2.4, delta = dl(rng), kk = k(rng), t = tau(rng);
    const auto a = density_matrix(t, DoublePeak{w0 / 2, w0 / 2, delta, kk}, m);
    const auto b = density_matrix(t, SinglePeak{w0, delta, kk}, m);
    CHECK((a.matrix() - b.matrix()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("strong damping normalizes without underflow") {
  const Scenario sc = test::preset_scenario("fig4", 2);
  const auto rho = density_matrix(sc.tau_at(4000.0), sc.spectrum, sc.medium);
  CHECK(rho.diagnostics().valid());
  CHECK(std::isfinite(rho(HH, HH).real()));
}

TEST_CASE("closed forms reject the discrete pair and negative times") {
  const Medium m = test::quartz_medium();
  CHECK_THROWS_AS(closed_form_element(HH, HH, 1.0, DiscretePair{1.0, 1.1}, m), UnsupportedVariant);
  CHECK_THROWS_AS(closed_form_element(HH, HH, -1.0, SinglePeak{2.0, 1e-3, 0.0}, m), DomainError);
}
