#pragma once

// Reduced polarization state after local birefringent dephasing for a time
// tau followed by wide-pump upconversion, in closed form.

#include "polsim/polarization.hpp"
#include "polsim/spectra.hpp"

namespace polsim {

double index_of(Pol p, const Medium& medium) noexcept;

/// exp[i tau (n_lambda omega_a + n_mu omega_b)]
cplx dephasing_phase(Pol lambda, Pol mu, double omega_a, double omega_b, double tau,
                     const Medium& medium);

/// An unnormalized element split as prefactor * exp(exponent) with exponent <= 0.
struct ElementTerm {
  double exponent = 0.0;
  cplx prefactor{};

  cplx value() const;
};

/// Log-split form of closed_form_element.
ElementTerm closed_form_term(PolPair row, PolPair col, double tau, const JointSpectrum& spectrum,
                             const Medium& medium);

/// Unnormalized element <row|rho(tau)|col> with the common factors dropped
/// (every element equals 2 at tau = 0). SinglePeak is evaluated with
/// Omega1 = Omega2 = omega0/2. DiscretePair throws UnsupportedVariant.
cplx closed_form_element(PolPair row, PolPair col, double tau, const JointSpectrum& spectrum,
                         const Medium& medium);

/// All 16 unnormalized elements. Underflowed damping factors come out as 0.
Matrix4c closed_form_matrix(double tau, const JointSpectrum& spectrum, const Medium& medium);

/// Trace-normalized state. Damping exponents are shifted by the largest
/// diagonal exponent before exponentiation, so strongly damped states
/// normalize without underflow.
PolarizationMatrix density_matrix(double tau, const JointSpectrum& spectrum, const Medium& medium);

}  // namespace polsim
