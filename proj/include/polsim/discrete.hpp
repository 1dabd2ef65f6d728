#pragma once

// Ideal protocol with a discrete colour-entangled pair: dephasing followed by
// upconversion of every frequency to a single omega_u.

#include "polsim/polarization.hpp"
#include "polsim/spectra.hpp"

#include <array>

namespace polsim {

/// Frequency basis of the discrete model. The last two are never populated
/// by the protocol.
enum class FreqBasis { W1W2 = 0, W2W1 = 1, W1W1 = 2, W2W2 = 3 };

/// Amplitudes over {HH,HV,VH,VV} x {w1w2, w2w1, w1w1, w2w2}, stored with the
/// global phase exp(i tau n_H omega0) removed.
struct DiscreteTotalState {
  Eigen::Matrix<cplx, 4, 4> coefficients;  ///< (polarization, frequency)

  cplx operator()(PolPair p, FreqBasis f) const {
    return coefficients(p.index(), static_cast<int>(f));
  }
  double squared_norm() const { return coefficients.squaredNorm(); }
};

DiscreteTotalState evolve_discrete(double tau, double omega1, double omega2, const Medium& medium);

/// <psi1|psi2> of the HV/VH subspace states attached to |w1,w2> and |w2,w1>.
cplx subspace_overlap(const DiscreteTotalState& state);

/// Schmidt coefficients across the polarization | frequency cut, descending.
std::array<double, 4> polarization_frequency_schmidt(const DiscreteTotalState& state);

struct CriticalTimes {
  double tau_c;  ///< constructive: psi1 == psi2
  double tau_d;  ///< destructive: psi1 == -psi2
};

/// m-th pair tau_c = 2 m pi/(dn dO), tau_d = (2m+1) pi/(dn dO), dO = |w2 - w1|.
CriticalTimes critical_times(double omega1, double omega2, const Medium& medium, int m);

/// Polarization amplitudes landing in |w_u, w_u> when every frequency vector
/// is mapped there coherently. Unnormalized.
Vector4c upconverted_amplitudes(const DiscreteTotalState& state);

/// Norm of the HV/VH part of upconverted_amplitudes; vanishes at every tau_d.
double psi1_residual(const DiscreteTotalState& state);

/// Post-selected polarization state after ideal upconversion. omega_u factors
/// out of the result and is accepted only for the interface. Throws
/// NumericalError when nothing survives the upconversion.
PolarizationMatrix ideal_upconvert(const DiscreteTotalState& state, double omega_u = 0.0);

}  // namespace polsim
