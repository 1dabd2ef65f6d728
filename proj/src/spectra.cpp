#include "polsim/spectra.hpp"

#include "polsim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace polsim {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_gaussian(double delta, double k) {
  if (!(delta > 0.0)) throw DomainError("spectral width delta must be positive");
  if (!(std::abs(k) <= 1.0)) throw DomainError("correlation coefficient must satisfy |k| <= 1");
}

// log of a bivariate normal density with covariance delta^2 [[1,k],[k,1]].
double log_gaussian(double da, double db, double delta, double k) {
  const double d2 = delta * delta;
  const double one_minus_k2 = 1.0 - k * k;
  const double quad = (da * da - 2.0 * k * da * db + db * db) / (d2 * one_minus_k2);
  return -std::log(2.0 * std::numbers::pi * d2 * std::sqrt(one_minus_k2)) - 0.5 * quad;
}

void require_continuous(const JointSpectrum& spectrum) {
  if (std::holds_alternative<DiscretePair>(spectrum))
    throw UnsupportedVariant("discrete colour pair has no continuous amplitude");
  validate(spectrum);
  if (std::abs(k_of(spectrum)) >= 1.0)
    throw DomainError("continuous amplitude is singular at |k| = 1");
}

}  // namespace

void validate(const Medium& medium) {
  if (!(medium.n_h > 0.0) || !(medium.n_v > 0.0))
    throw DomainError("refractive indices must be positive");
}

void validate(const JointSpectrum& spectrum) {
  std::visit(overloaded{
                 [](const SinglePeak& s) {
                   if (!(s.omega0 > 0.0)) throw DomainError("pump frequency must be positive");
                   check_gaussian(s.delta, s.k);
                 },
                 [](const DoublePeak& s) {
                   check_gaussian(s.delta, s.k);
                   if (!(s.omega2 >= s.omega1)) throw DomainError("double peak needs Omega2 >= Omega1");
                 },
                 [](const DiscretePair& s) {
                   if (s.omega1 == s.omega2) throw DomainError("discrete pair needs omega1 != omega2");
                 },
             },
             spectrum);
}

bool well_separated(const JointSpectrum& spectrum) {
  if (const auto* s = std::get_if<DoublePeak>(&spectrum))
    return s->separation() >= kWellSeparatedDeltas * s->delta;
  return true;
}

Eigen::Matrix2d covariance(double delta, double k) {
  check_gaussian(delta, k);
  const double d2 = delta * delta;
  Eigen::Matrix2d c;
  c << d2, k * d2, k * d2, d2;
  return c;
}

double delta_of(const JointSpectrum& spectrum) {
  return std::visit(overloaded{
                        [](const SinglePeak& s) { return s.delta; },
                        [](const DoublePeak& s) { return s.delta; },
                        [](const DiscretePair&) -> double {
                          throw UnsupportedVariant("discrete colour pair has no width");
                        },
                    },
                    spectrum);
}

double k_of(const JointSpectrum& spectrum) {
  return std::visit(overloaded{
                        [](const SinglePeak& s) { return s.k; },
                        [](const DoublePeak& s) { return s.k; },
                        [](const DiscretePair&) -> double {
                          throw UnsupportedVariant("discrete colour pair has no correlation coefficient");
                        },
                    },
                    spectrum);
}

std::vector<Eigen::Vector2d> peak_centers(const JointSpectrum& spectrum) {
  return std::visit(overloaded{
                        [](const SinglePeak& s) {
                          return std::vector<Eigen::Vector2d>{{0.5 * s.omega0, 0.5 * s.omega0}};
                        },
                        [](const DoublePeak& s) {
                          return std::vector<Eigen::Vector2d>{{s.omega1, s.omega2}, {s.omega2, s.omega1}};
                        },
                        [](const DiscretePair& s) {
                          return std::vector<Eigen::Vector2d>{{s.omega1, s.omega2}, {s.omega2, s.omega1}};
                        },
                    },
                    spectrum);
}

double peak_log_density(const JointSpectrum& spectrum, std::size_t peak, double omega_a,
                        double omega_b) {
  require_continuous(spectrum);
  const auto centers = peak_centers(spectrum);
  if (peak >= centers.size()) throw std::out_of_range("peak index " + std::to_string(peak));
  return log_gaussian(omega_a - centers[peak].x(), omega_b - centers[peak].y(),
                      delta_of(spectrum), k_of(spectrum));
}

double amplitude(const JointSpectrum& spectrum, double omega_a, double omega_b,
                 AmplitudeForm form) {
  require_continuous(spectrum);
  if (std::holds_alternative<SinglePeak>(spectrum))
    return std::exp(0.5 * peak_log_density(spectrum, 0, omega_a, omega_b));

  const double l1 = peak_log_density(spectrum, 0, omega_a, omega_b);
  const double l2 = peak_log_density(spectrum, 1, omega_a, omega_b);
  if (form == AmplitudeForm::Separated) return std::exp(0.5 * l1) + std::exp(0.5 * l2);
  // sqrt(P1 + P2) evaluated as sqrt(e^m (e^(l1-m) + e^(l2-m))) to survive far tails.
  const double m = std::max(l1, l2);
  return std::exp(0.5 * (m + std::log(std::exp(l1 - m) + std::exp(l2 - m))));
}

}  // namespace polsim
