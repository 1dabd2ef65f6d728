#pragma once

// Upconversion pump overlap kernel for Gaussian pumps.

namespace polsim {

/// Gaussian upconversion pump, P(nu) = N(nu0, sigma^2).
struct Pump {
  double sigma = 0.0;  ///< rad/fs
  double nu0 = 0.0;    ///< rad/fs; the kernel depends only on detunings

  void validate() const;
};

/// E(da, db) = exp(-da^2/4s^2)/(2s sqrt(pi)) * exp(-db^2/4s^2)/(2s sqrt(pi)),
/// in fs^2. Each factor is a unit-mass Gaussian of variance 2 sigma^2.
double kernel_E(double d_omega_a, double d_omega_b, const Pump& pump);

/// kernel_E(d, d) * 4 pi sigma^2, in (0, 1]. Close to 1 means the pump is
/// wide enough that E is flat over detunings up to `max_detuning`.
double wide_pump_ratio(double max_detuning, const Pump& pump);

}  // namespace polsim
