#include "polsim/units.hpp"

#include "polsim/errors.hpp"

#include <cmath>
#include <numbers>

namespace polsim {

UnitContext::UnitContext(double lambda_pump_nm) : lambda_pump_(lambda_pump_nm) {
  if (!(lambda_pump_nm > 0.0)) throw DomainError("pump wavelength must be positive");
}

double UnitContext::omega_pump() const { return wavelength_to_angular_frequency(lambda_pump_); }

double wavelength_to_angular_frequency(double lambda_nm) {
  if (!(lambda_nm > 0.0)) throw DomainError("wavelength must be positive");
  return 2.0 * std::numbers::pi * kSpeedOfLight / lambda_nm;
}

double wavelength_span_to_omega(double span_nm, double lambda_center_nm) {
  if (!(span_nm > 0.0) || !(lambda_center_nm > 0.0))
    throw DomainError("wavelength span and centre must be positive");
  return 2.0 * std::numbers::pi * kSpeedOfLight * span_nm / (lambda_center_nm * lambda_center_nm);
}

double fwhm_nm_to_sigma(double fwhm_nm, double lambda_center_nm) {
  if (!(fwhm_nm > 0.0) || !(lambda_center_nm > 0.0))
    throw DomainError("FWHM and centre wavelength must be positive");
  const double fwhm_to_sigma = 2.0 * std::sqrt(2.0 * std::numbers::ln2);
  return wavelength_span_to_omega(fwhm_nm, lambda_center_nm) / fwhm_to_sigma;
}

double path_difference_to_time(double x, const Medium& medium, const UnitContext& ctx) {
  const double dn = medium.delta_n();
  if (!(dn > 0.0)) throw DomainError("path difference needs n_V > n_H");
  if (x < 0.0) throw DomainError("path difference must be non-negative");
  return x * ctx.lambda_photon() / (kSpeedOfLight * dn);
}

double time_to_path_difference(double tau_fs, const Medium& medium, const UnitContext& ctx) {
  const double dn = medium.delta_n();
  if (!(dn > 0.0)) throw DomainError("path difference needs n_V > n_H");
  if (tau_fs < 0.0) throw DomainError("interaction time must be non-negative");
  return tau_fs * kSpeedOfLight * dn / ctx.lambda_photon();
}

}  // namespace polsim
