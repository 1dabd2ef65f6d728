#pragma once

#include "polsim/config.hpp"
#include "polsim/polarization.hpp"
#include "polsim/sweep.hpp"

#include <Eigen/QR>

#include <random>

namespace polsim::test {

inline Medium quartz_medium() { return {1.51004, 1.54360}; }

inline Scenario preset_scenario(const std::string& name, std::size_t curve) {
  return make_scenario(figure_preset(name).at(curve).spec);
}

inline Eigen::Matrix2cd random_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Eigen::Matrix2cd a;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) a(i, j) = cplx(n(rng), n(rng));
  Eigen::HouseholderQR<Eigen::Matrix2cd> qr(a);
  return qr.householderQ();
}

inline Matrix4c local_unitary(std::mt19937_64& rng) {
  const Eigen::Matrix2cd ua = random_unitary(rng);
  const Eigen::Matrix2cd ub = random_unitary(rng);
  Matrix4c u;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) u(2 * i + k, 2 * j + l) = ua(i, j) * ub(k, l);
  return u;
}

// Mixture of `rank` random pure states with random weights.
inline PolarizationMatrix random_state(std::mt19937_64& rng, int rank) {
  std::normal_distribution<double> n;
  std::uniform_real_distribution<double> w(0.05, 1.0);
  Matrix4c m = Matrix4c::Zero();
  for (int r = 0; r < rank; ++r) {
    Vector4c v;
    for (int i = 0; i < 4; ++i) v(i) = cplx(n(rng), n(rng));
    m += w(rng) * v * v.adjoint() / v.squaredNorm();
  }
  return PolarizationMatrix::normalized(m);
}

inline Vector4c bell_phi_plus() {
  Vector4c v = Vector4c::Zero();
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return v;
}

}  // namespace polsim::test
