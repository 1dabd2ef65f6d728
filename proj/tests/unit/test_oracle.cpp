#include "polsim/dephasing.hpp"
#include "polsim/discrete.hpp"
#include "polsim/entanglement.hpp"
#include "polsim/errors.hpp"
#include "polsim/oracle.hpp"
#include "polsim/units.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace polsim;

namespace {

double max_rel(const Matrix4c& a, const Matrix4c& b) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      worst = std::max(worst, std::abs(a(i, j) - b(i, j)) / std::max(std::abs(b(i, j)), 1e-9));
  return worst;
}

Scenario with_k(const std::string& preset, std::size_t curve, double k) {
  auto spec = figure_preset(preset).at(curve).spec;
  spec.k = k;
  return make_scenario(spec);
}

double tau_d(const Scenario& sc) {
  const auto& d = std::get<DoublePeak>(sc.spectrum);
  return critical_times(d.omega1, d.omega2, sc.medium, 0).tau_d;
}

}  // namespace

TEST_CASE("every element is 2 at tau = 0") {
  for (const Scenario& sc : {with_k("fig3", 2, -0.9), with_k("fig5", 0, 0.3)}) {
    const auto q = full_matrix_quadrature(0.0, sc.spectrum, sc.medium, std::nullopt, {});
    CHECK((q.unnormalized - Matrix4c::Constant(2.0)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(element_quadrature(HV, VH, 0.0, sc.spectrum, sc.medium, std::nullopt, {}) - 2.0) < 1e-12);
  }
}

TEST_CASE("near-anticorrelated proxy reproduces the forced zero at tau_d") {
  const Scenario sc = with_k("fig3", 2, -0.99999);
  const double td = tau_d(sc);
  QuadratureSpec spec;
  spec.order = required_order(td, sc.spectrum, sc.medium, spec);
  const cplx hv = element_quadrature(HV, HV, td, sc.spectrum, sc.medium, std::nullopt, spec);
  CHECK(std::abs(hv) < 1e-4);
}

TEST_CASE("generic point matches the closed form") {
  const Scenario sc = with_k("fig4", 1, -0.99);
  const double tau = sc.tau_at(50.0);
  const Matrix4c closed = closed_form_matrix(tau, sc.spectrum, sc.medium);
  const auto q = full_matrix_quadrature(tau, sc.spectrum, sc.medium, std::nullopt, {});
  CHECK(max_rel(q.unnormalized, closed) < 1e-6);
  CHECK(q.max_asymmetry < 1e-12);
}

TEST_CASE("Gauss-Hermite agrees with trapezoid") {
  const Scenario sc = with_k("fig4", 0, -0.999);
  for (double x : {0.0, 80.0, 200.0}) {
    const double tau = sc.tau_at(x);
    QuadratureSpec gh;
    gh.scheme = QuadratureScheme::GaussHermite;
    gh.order = std::max(64, required_order(tau, sc.spectrum, sc.medium, gh));
    QuadratureSpec tr;
    tr.order = std::max(64, required_order(tau, sc.spectrum, sc.medium, tr));
    const auto a = full_matrix_quadrature(tau, sc.spectrum, sc.medium, std::nullopt, gh);
    const auto b = full_matrix_quadrature(tau, sc.spectrum, sc.medium, std::nullopt, tr);
    CHECK(max_rel(a.unnormalized, b.unnormalized) < 1e-6);
  }
}

TEST_CASE("exact and separated amplitudes give the same concurrence") {
  for (std::size_t curve = 0; curve < 3; ++curve) {
    const Scenario sc = with_k("fig4", curve, figure_preset("fig4")[curve].spec.k);
    for (double x : {100.0, 260.0}) {
      const double tau = sc.tau_at(x);
      QuadratureSpec spec;
      spec.order = std::max(64, required_order(tau, sc.spectrum, sc.medium, spec));
      const auto e = full_matrix_quadrature(tau, sc.spectrum, sc.medium, std::nullopt, spec, AmplitudeForm::Exact);
      const auto s = full_matrix_quadrature(tau, sc.spectrum, sc.medium, std::nullopt, spec, AmplitudeForm::Separated);
      CHECK(std::abs(concurrence(e.rho) - concurrence(s.rho)) < 5e-3);
    }
  }
  const Scenario sc = with_k("fig4", 0, -0.999);
  QuadratureSpec gh;
  gh.scheme = QuadratureScheme::GaussHermite;
  CHECK_THROWS_AS(quadrature_nodes(sc.spectrum, gh, AmplitudeForm::Exact), UnsupportedVariant);
}

TEST_CASE("finite pump converges to the wide-pump limit") {
  const Scenario sc = with_k("fig4", 2, -0.9);
  const double tau = sc.tau_at(60.0);
  QuadratureSpec spec;
  spec.order = 24;
  spec.span = 6.0;
  const auto wide = full_matrix_quadrature(tau, sc.spectrum, sc.medium, std::nullopt, spec);
  // largest detuning between nodes: across both peaks plus the window
  const auto nodes = quadrature_nodes(sc.spectrum, spec);
  double det = 0.0;
  for (const auto& a : nodes)
    for (const auto& b : {nodes.front(), nodes.back()})
      det = std::max({det, std::abs(a.d_omega_a - b.d_omega_a), std::abs(a.d_omega_b - b.d_omega_b)});
  const auto finite = full_matrix_quadrature(tau, sc.spectrum, sc.medium, Pump{100 * det, 0.0}, spec);
  CHECK(max_rel(finite.unnormalized, wide.unnormalized) < 1e-3);
  CHECK((finite.rho.matrix() - wide.rho.matrix()).cwiseAbs().maxCoeff() < 1e-3);
}

TEST_CASE("narrow pump removes the erasure") {
  const Scenario sc = with_k("fig4", 1, -0.99);
  const double tau = sc.tau_at(150.0);
  QuadratureSpec spec;
  spec.order = 24;
  spec.span = 6.0;
  const auto narrow = full_matrix_quadrature(tau, sc.spectrum, sc.medium, Pump{1e-9, 0.0}, spec);
  const auto reference = dephasing_only_matrix(tau, sc.spectrum, sc.medium, spec);
  CHECK((narrow.rho.matrix() - reference.matrix()).cwiseAbs().maxCoeff() < 1e-6);
  // without erasure the polarization coherences are gone, so no entanglement
  CHECK(concurrence(reference) < concurrence(full_matrix_quadrature(tau, sc.spectrum, sc.medium, std::nullopt, spec).rho));
}

TEST_CASE("resolution guard and domain") {
  const Scenario sc = with_k("fig5", 0, -0.999);
  const double tau = sc.tau_at(2000.0);
  QuadratureSpec spec;
  const int need = required_order(tau, sc.spectrum, sc.medium, spec);
  spec.order = need - 1;
  if (spec.order >= 16) {
    try {
      full_matrix_quadrature(tau, sc.spectrum, sc.medium, std::nullopt, spec);
      FAIL("expected ResolutionError");
    } catch (const ResolutionError& e) {
      CHECK(e.required_order() == need);
      CHECK(std::string(e.what()).find(std::to_string(need)) != std::string::npos);
    }
  }
  spec.order = 16;
  CHECK_THROWS_AS(element_quadrature(HV, HV, sc.tau_at(1e5), sc.spectrum, sc.medium, std::nullopt, spec),
                  ResolutionError);
  const Scenario anti = test::preset_scenario("fig3", 0);
  try {
    element_quadrature(HH, HH, 0.0, anti.spectrum, anti.medium, std::nullopt, {});
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("-0.99999") != std::string::npos);
  }
  QuadratureSpec bad;
  bad.order = 8;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  CHECK_THROWS_AS(quadrature_nodes(DiscretePair{1.0, 1.1}, {}), UnsupportedVariant);
}
