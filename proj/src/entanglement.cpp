#include "polsim/entanglement.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <functional>

namespace polsim {
namespace {

double from_lambdas(std::array<double, 4> l) {
  std::sort(l.begin(), l.end(), std::greater<>());
  return std::clamp(l[0] - l[1] - l[2] - l[3], 0.0, 1.0);
}

Matrix4c hermitian_part(const Matrix4c& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

Matrix4c spin_flip() {
  Matrix4c y = Matrix4c::Zero();
  y(0, 3) = -1.0;
  y(1, 2) = 1.0;
  y(2, 1) = 1.0;
  y(3, 0) = -1.0;
  return y;
}

Matrix4c spin_flipped(const Matrix4c& rho) {
  const Matrix4c y = spin_flip();
  return y * rho.conjugate() * y;
}

double concurrence(const PolarizationMatrix& rho, double rank_tol) {
  rho.require_valid(1e-10);
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(hermitian_part(rho.matrix()));
  const auto& evals = es.eigenvalues();
  const auto& evecs = es.eigenvectors();

  int rank = 0;
  Matrix4c w = Matrix4c::Zero();
  for (int i = 0; i < 4; ++i) {
    if (evals(i) > rank_tol) w.col(rank++) = evecs.col(i) * std::sqrt(evals(i));
  }
  if (rank == 0) return 0.0;
  const Eigen::MatrixXcd wr = w.leftCols(rank);
  const Eigen::MatrixXcd tau = wr.transpose() * spin_flip() * wr;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(tau);
  std::array<double, 4> l{0.0, 0.0, 0.0, 0.0};
  for (int i = 0; i < rank; ++i) l[i] = svd.singularValues()(i);
  return from_lambdas(l);
}

std::array<double, 4> wootters_eigenvalues(const PolarizationMatrix& rho) {
  const Matrix4c h = hermitian_part(rho.matrix());
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(h);
  const Eigen::Vector4d root = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Matrix4c sqrt_rho = es.eigenvectors() * root.cast<cplx>().asDiagonal() *
                            es.eigenvectors().adjoint();
  const Matrix4c r = hermitian_part(sqrt_rho * spin_flipped(h) * sqrt_rho);
  Eigen::SelfAdjointEigenSolver<Matrix4c> rs(r, Eigen::EigenvaluesOnly);
  std::array<double, 4> ev;
  for (int i = 0; i < 4; ++i) ev[i] = rs.eigenvalues()(i);
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

std::array<double, 4> wootters_lambdas(const PolarizationMatrix& rho) {
  auto l = wootters_eigenvalues(rho);
  for (double& v : l) v = std::sqrt(std::max(v, 0.0));
  return l;
}

double concurrence_hermitian(const PolarizationMatrix& rho) {
  rho.require_valid(1e-10);
  return from_lambdas(wootters_lambdas(rho));
}

double purity(const PolarizationMatrix& rho) {
  return (rho.matrix() * rho.matrix()).trace().real();
}

}  // namespace polsim
