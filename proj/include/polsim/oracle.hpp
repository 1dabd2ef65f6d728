#pragma once

// Brute-force quadrature of the general upconverted density-matrix element
//
//   <l m|rho|l' m'> ~ Int g(w) g(w') exp[i tau (n_l w_a + n_m w_b - n_l' w'_a - n_m' w'_b)]
//                         E(w_a - w'_a, w_b - w'_b)
//
// used to check the closed forms. Nodes are laid out along the principal axes
// of the covariance, one patch per Gaussian term of the amplitude. The exact
// double-peak amplitude sqrt(P1 + P2) gets a single window covering both peaks.

#include "polsim/erasure.hpp"
#include "polsim/polarization.hpp"
#include "polsim/spectra.hpp"

#include <optional>
#include <vector>

namespace polsim {

enum class QuadratureScheme {
  Trapezoid,     ///< composite trapezoid on +-span standard deviations
  GaussHermite,  ///< Gauss-Hermite nodes matched to each axis width
};

struct QuadratureSpec {
  int order = 64;     ///< nodes per axis per peak
  double span = 8.0;  ///< trapezoid half-width, in amplitude standard deviations
  QuadratureScheme scheme = QuadratureScheme::Trapezoid;

  void validate() const;
};

/// Minimum nodes per oscillation period accepted by the resolution guard.
inline constexpr double kMinNodesPerPeriod = 6.0;

/// Weighted integration node. Offsets are relative to (omega0/2, omega0/2);
/// `mass` = weight * amplitude term.
struct QuadratureNode {
  double d_omega_a;
  double d_omega_b;
  double mass;
};

std::vector<QuadratureNode> quadrature_nodes(const JointSpectrum& spectrum,
                                             const QuadratureSpec& spec,
                                             AmplitudeForm form = AmplitudeForm::Separated);

/// Smallest order that passes the resolution guard for every element at tau.
int required_order(double tau, const JointSpectrum& spectrum, const Medium& medium,
                   const QuadratureSpec& spec);

/// Element rescaled so that every element is 2 at tau = 0, matching the closed
/// forms. `pump` == nullopt selects the wide-pump factorised evaluation
/// (two 2D integrals); a Pump selects the full 4D sum with kernel_E.
/// Throws DomainError for |k| = 1 and ResolutionError when spec.order is below
/// required_order.
cplx element_quadrature(PolPair row, PolPair col, double tau, const JointSpectrum& spectrum,
                        const Medium& medium, const std::optional<Pump>& pump,
                        const QuadratureSpec& spec,
                        AmplitudeForm form = AmplitudeForm::Separated);

struct QuadratureMatrix {
  Matrix4c unnormalized;  ///< rescaled elements before symmetrisation
  PolarizationMatrix rho;  ///< (m + m^dagger)/2, trace normalized
  double max_asymmetry = 0.0;  ///< max |m - m^dagger| before symmetrisation
};

QuadratureMatrix full_matrix_quadrature(double tau, const JointSpectrum& spectrum,
                                        const Medium& medium, const std::optional<Pump>& pump,
                                        const QuadratureSpec& spec,
                                        AmplitudeForm form = AmplitudeForm::Separated);

/// Reduced state after dephasing alone (no upconversion): Int |g|^2 times the
/// relative phase, trace normalized. Reference for the narrow-pump limit.
PolarizationMatrix dephasing_only_matrix(double tau, const JointSpectrum& spectrum,
                                         const Medium& medium, const QuadratureSpec& spec,
                                         AmplitudeForm form = AmplitudeForm::Separated);

}  // namespace polsim
