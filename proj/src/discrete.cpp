#include "polsim/discrete.hpp"

#include "polsim/dephasing.hpp"
#include "polsim/errors.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <numbers>

namespace polsim {

DiscreteTotalState evolve_discrete(double tau, double omega1, double omega2, const Medium& medium) {
  validate(medium);
  if (tau < 0.0) throw DomainError("interaction time must be non-negative");
  if (omega1 == omega2) throw DomainError("discrete pair needs omega1 != omega2");

  DiscreteTotalState s;
  s.coefficients.setZero();
  const double amp = 0.5 / std::numbers::sqrt2;
  for (PolPair p : kBasis) {
    // Phases relative to n_H: exp(i tau (n_l - n_H) w_a + i tau (n_m - n_H) w_b).
    const double ea = index_of(p.a, medium) - medium.n_h;
    const double eb = index_of(p.b, medium) - medium.n_h;
    s.coefficients(p.index(), static_cast<int>(FreqBasis::W1W2)) =
        amp * std::polar(1.0, tau * (ea * omega1 + eb * omega2));
    s.coefficients(p.index(), static_cast<int>(FreqBasis::W2W1)) =
        amp * std::polar(1.0, tau * (ea * omega2 + eb * omega1));
  }
  return s;
}

cplx subspace_overlap(const DiscreteTotalState& state) {
  Eigen::Vector2cd psi1(state(HV, FreqBasis::W1W2), state(VH, FreqBasis::W1W2));
  Eigen::Vector2cd psi2(state(HV, FreqBasis::W2W1), state(VH, FreqBasis::W2W1));
  const double n1 = psi1.norm();
  const double n2 = psi2.norm();
  if (!(n1 > 0.0) || !(n2 > 0.0)) throw NumericalError("empty HV/VH subspace");
  return psi1.dot(psi2) / (n1 * n2);
}

std::array<double, 4> polarization_frequency_schmidt(const DiscreteTotalState& state) {
  Eigen::JacobiSVD<Eigen::Matrix<cplx, 4, 4>> svd(state.coefficients);
  const auto sv = svd.singularValues();
  return {sv(0), sv(1), sv(2), sv(3)};
}

CriticalTimes critical_times(double omega1, double omega2, const Medium& medium, int m) {
  const double d_omega = std::abs(omega2 - omega1);
  const double dn = medium.delta_n();
  if (d_omega == 0.0) throw DomainError("critical times need omega1 != omega2");
  if (dn == 0.0) throw DomainError("critical times need a birefringent medium");
  if (m < 0) throw DomainError("critical time index must be non-negative");
  const double unit = std::numbers::pi / std::abs(dn * d_omega);
  return {2.0 * m * unit, (2.0 * m + 1.0) * unit};
}

Vector4c upconverted_amplitudes(const DiscreteTotalState& state) {
  return state.coefficients.rowwise().sum();
}

double psi1_residual(const DiscreteTotalState& state) {
  const Vector4c v = upconverted_amplitudes(state);
  return std::hypot(std::abs(v(HV.index())), std::abs(v(VH.index())));
}

PolarizationMatrix ideal_upconvert(const DiscreteTotalState& state, double /*omega_u*/) {
  const Vector4c v = upconverted_amplitudes(state);
  if (!(v.squaredNorm() > 1e-24 * state.squared_norm())) throw NumericalError("no amplitude survives upconversion");
  return PolarizationMatrix::from_pure(v);
}

}  // namespace polsim
