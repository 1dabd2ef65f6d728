#include "polsim/dephasing.hpp"

#include "polsim/errors.hpp"

#include <cmath>
#include <limits>

namespace polsim {
namespace {

struct PeakFrequencies {
  double omega1;
  double omega2;
  double delta;
  double k;
};

PeakFrequencies peaks_of(const JointSpectrum& spectrum) {
  validate(spectrum);
  if (const auto* s = std::get_if<DoublePeak>(&spectrum))
    return {s->omega1, s->omega2, s->delta, s->k};
  if (const auto* s = std::get_if<SinglePeak>(&spectrum))
    return {0.5 * s->omega0, 0.5 * s->omega0, s->delta, s->k};
  throw UnsupportedVariant("closed forms need a Gaussian spectrum; use the discrete module");
}

}  // namespace

double index_of(Pol p, const Medium& medium) noexcept {
  return p == Pol::H ? medium.n_h : medium.n_v;
}

cplx dephasing_phase(Pol lambda, Pol mu, double omega_a, double omega_b, double tau,
                     const Medium& medium) {
  const double phase = tau * (index_of(lambda, medium) * omega_a + index_of(mu, medium) * omega_b);
  return std::polar(1.0, phase);
}

cplx ElementTerm::value() const {
  if (prefactor == cplx{}) return {};
  return prefactor * std::exp(exponent);
}

ElementTerm closed_form_term(PolPair row, PolPair col, double tau, const JointSpectrum& spectrum,
                             const Medium& medium) {
  validate(medium);
  if (tau < 0.0) throw DomainError("interaction time must be non-negative");
  const auto [o1, o2, delta, k] = peaks_of(spectrum);

  if (col.index() < row.index()) {
    ElementTerm t = closed_form_term(col, row, tau, spectrum, medium);
    t.prefactor = std::conj(t.prefactor);
    return t;
  }

  const double nh = medium.n_h;
  const double nv = medium.n_v;
  const double dn = medium.delta_n();
  const double t2d2 = tau * tau * delta * delta;
  const double a = tau * dn;

  // e^{-ia O1} + e^{-ia O2}, written with the half difference so that the
  // zero at cos(a dO) = -1 survives large absolute phases.
  const cplx peak_phase_sum =
      2.0 * std::cos(0.5 * a * (o2 - o1)) * std::polar(1.0, -0.5 * a * (o1 + o2));
  const double fringe = 1.0 + std::cos(a * (o2 - o1));

  const double rate_h_mixed = (3.0 + 2.0 * k) * nh * nh + 2.0 * k * nh * nv + nv * nv;
  const double rate_v_mixed = (3.0 + 2.0 * k) * nv * nv + 2.0 * k * nh * nv + nh * nh;
  const double rate_cross = 2.0 * (nh * nh + 2.0 * k * nh * nv + nv * nv);

  const int r = row.index();
  const int c = col.index();
  auto term = [&](double rate, cplx pre) { return ElementTerm{-rate * t2d2, pre}; };

  if (r == 0 && c == 0) return term(4.0 * (1.0 + k) * nh * nh, 2.0);
  if (r == 0 && (c == 1 || c == 2)) return term(rate_h_mixed, peak_phase_sum);
  if (r == 0 && c == 3)
    return term(2.0 * (1.0 + k) * (nh * nh + nv * nv), 2.0 * std::polar(1.0, -a * (o1 + o2)));
  if ((r == 1 || r == 2) && (c == 1 || c == 2)) return term(rate_cross, fringe);
  if ((r == 1 || r == 2) && c == 3) return term(rate_v_mixed, peak_phase_sum);
  return term(4.0 * (1.0 + k) * nv * nv, 2.0);
}

cplx closed_form_element(PolPair row, PolPair col, double tau, const JointSpectrum& spectrum,
                         const Medium& medium) {
  return closed_form_term(row, col, tau, spectrum, medium).value();
}

Matrix4c closed_form_matrix(double tau, const JointSpectrum& spectrum, const Medium& medium) {
  Matrix4c m;
  for (PolPair r : kBasis)
    for (PolPair c : kBasis) m(r.index(), c.index()) = closed_form_element(r, c, tau, spectrum, medium);
  return m;
}

PolarizationMatrix density_matrix(double tau, const JointSpectrum& spectrum, const Medium& medium) {
  std::array<std::array<ElementTerm, 4>, 4> terms;
  double shift = -std::numeric_limits<double>::infinity();
  for (PolPair r : kBasis) {
    for (PolPair c : kBasis) {
      terms[r.index()][c.index()] = closed_form_term(r, c, tau, spectrum, medium);
    }
    const ElementTerm& diag = terms[r.index()][r.index()];
    if (diag.prefactor != cplx{}) shift = std::max(shift, diag.exponent);
  }
  Matrix4c m;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const ElementTerm& t = terms[r][c];
      m(r, c) = t.prefactor == cplx{} ? cplx{} : t.prefactor * std::exp(t.exponent - shift);
    }
  }
  return PolarizationMatrix::normalized(m);
}

}  // namespace polsim
