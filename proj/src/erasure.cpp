#include "polsim/erasure.hpp"

#include "polsim/errors.hpp"

#include <cmath>
#include <numbers>

namespace polsim {

void Pump::validate() const {
  if (!(sigma > 0.0)) throw DomainError("pump width sigma must be positive");
}

double kernel_E(double d_omega_a, double d_omega_b, const Pump& pump) {
  pump.validate();
  const double s = pump.sigma;
  const double norm = 1.0 / (2.0 * s * std::sqrt(std::numbers::pi));
  const double inv = 1.0 / (4.0 * s * s);
  return norm * std::exp(-d_omega_a * d_omega_a * inv) * norm *
         std::exp(-d_omega_b * d_omega_b * inv);
}

double wide_pump_ratio(double max_detuning, const Pump& pump) {
  if (max_detuning < 0.0) throw DomainError("detuning bound must be non-negative");
  pump.validate();
  // Same as kernel_E(d, d) * 4 pi sigma^2 without the normalization round trip.
  return std::exp(-2.0 * max_detuning * max_detuning / (4.0 * pump.sigma * pump.sigma));
}

}  // namespace polsim
