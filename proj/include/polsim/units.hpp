#pragma once

// Laboratory units (nm, FWHM in nm) <-> internal units (rad/fs, fs).

#include "polsim/spectra.hpp"

namespace polsim {

/// Speed of light in nm/fs.
inline constexpr double kSpeedOfLight = 299.792458;

/// Pump and photon wavelengths. Photons are degenerate at twice the pump
/// wavelength.
class UnitContext {
 public:
  explicit UnitContext(double lambda_pump_nm);

  double lambda_pump() const noexcept { return lambda_pump_; }
  double lambda_photon() const noexcept { return 2.0 * lambda_pump_; }
  double omega_pump() const;

 private:
  double lambda_pump_;
};

double wavelength_to_angular_frequency(double lambda_nm);

/// Gaussian standard deviation (rad/fs) of a peak whose wavelength FWHM is
/// `fwhm_nm`, linearised at `lambda_center_nm`.
double fwhm_nm_to_sigma(double fwhm_nm, double lambda_center_nm);

/// Angular-frequency spread of a wavelength interval, linearised at
/// `lambda_center_nm`. Used for peak separations.
double wavelength_span_to_omega(double span_nm, double lambda_center_nm);

/// Dimensionless path difference x = dn*L/lambda_photon to interaction time.
double path_difference_to_time(double x, const Medium& medium, const UnitContext& ctx);
double time_to_path_difference(double tau_fs, const Medium& medium, const UnitContext& ctx);

}  // namespace polsim
