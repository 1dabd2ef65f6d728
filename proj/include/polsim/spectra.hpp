#pragma once

// Initial two-photon joint frequency amplitudes g(omega_a, omega_b).

#include <Eigen/Core>

#include <variant>
#include <vector>

namespace polsim {

/// Birefringent medium. Indices are frequency independent.
struct Medium {
  double n_h = 0.0;
  double n_v = 0.0;

  double delta_n() const noexcept { return n_v - n_h; }
};

void validate(const Medium& medium);

/// Bivariate Gaussian centred at (omega0/2, omega0/2).
struct SinglePeak {
  double omega0 = 0.0;
  double delta = 0.0;  ///< per-photon std dev (rad/fs)
  double k = 0.0;      ///< correlation coefficient
};

/// Symmetric pair of bivariate Gaussians at (Omega1, Omega2) and (Omega2, Omega1).
struct DoublePeak {
  double omega1 = 0.0;
  double omega2 = 0.0;
  double delta = 0.0;
  double k = 0.0;

  double omega0() const noexcept { return omega1 + omega2; }
  double separation() const noexcept { return omega2 - omega1; }
};

/// Discrete colour-entangled state (|w1,w2> + |w2,w1>)/sqrt(2).
struct DiscretePair {
  double omega1 = 0.0;
  double omega2 = 0.0;
};

using JointSpectrum = std::variant<SinglePeak, DoublePeak, DiscretePair>;

/// Throws DomainError when a spectrum breaks its invariants. Accepts |k| = 1.
void validate(const JointSpectrum& spectrum);

/// DoublePeak separation below this many deltas is flagged (closed forms
/// assume well separated peaks).
inline constexpr double kWellSeparatedDeltas = 6.0;

/// True unless a DoublePeak has separation < kWellSeparatedDeltas * delta.
bool well_separated(const JointSpectrum& spectrum);

Eigen::Matrix2d covariance(double delta, double k);

enum class AmplitudeForm {
  Exact,      ///< sqrt(P1 + P2)
  Separated,  ///< sqrt(P1) + sqrt(P2)
};

/// Real non-negative amplitude in fs. Requires a Gaussian variant with |k| < 1;
/// DiscretePair throws UnsupportedVariant, |k| = 1 throws DomainError.
double amplitude(const JointSpectrum& spectrum, double omega_a, double omega_b,
                 AmplitudeForm form = AmplitudeForm::Exact);

/// Mean vectors of the Gaussian components (one for SinglePeak, two for
/// DoublePeak).
std::vector<Eigen::Vector2d> peak_centers(const JointSpectrum& spectrum);

/// log P_i(omega_a, omega_b) of the i-th Gaussian component.
double peak_log_density(const JointSpectrum& spectrum, std::size_t peak, double omega_a,
                        double omega_b);

double delta_of(const JointSpectrum& spectrum);
double k_of(const JointSpectrum& spectrum);

}  // namespace polsim
