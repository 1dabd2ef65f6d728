#include "polsim/polarization.hpp"

#include "polsim/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cctype>
#include <stdexcept>

namespace polsim {

std::string to_string(PolPair p) {
  std::string s;
  s += p.a == Pol::H ? 'H' : 'V';
  s += p.b == Pol::H ? 'H' : 'V';
  return s;
}

PolPair parse_pol_pair(const std::string& s) {
  auto pol = [&](char c) {
    switch (std::toupper(static_cast<unsigned char>(c))) {
      case 'H': return Pol::H;
      case 'V': return Pol::V;
      default: throw std::invalid_argument("bad polarization pair '" + s + "'");
    }
  };
  if (s.size() != 2) throw std::invalid_argument("bad polarization pair '" + s + "'");
  return {pol(s[0]), pol(s[1])};
}

PolarizationMatrix PolarizationMatrix::from_pure(const Vector4c& psi) {
  const double n2 = psi.squaredNorm();
  if (!(n2 > 0.0)) throw NumericalError("cannot build a state from a zero vector");
  return PolarizationMatrix(psi * psi.adjoint() / n2);
}

PolarizationMatrix PolarizationMatrix::normalized(const Matrix4c& unnormalized) {
  const double tr = unnormalized.trace().real();
  if (!(tr > 0.0) || !std::isfinite(tr))
    throw NumericalError("density matrix trace is not positive (" + std::to_string(tr) + ")");
  return PolarizationMatrix(unnormalized / tr);
}

StateDiagnostics PolarizationMatrix::diagnostics() const {
  StateDiagnostics d;
  d.hermiticity_error = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  d.trace_error = std::abs(m_.trace() - cplx(1.0, 0.0));
  const Matrix4c herm = 0.5 * (m_ + m_.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(herm, Eigen::EigenvaluesOnly);
  d.min_eigenvalue = es.eigenvalues().minCoeff();
  return d;
}

void PolarizationMatrix::require_valid(double tol) const {
  const double herm = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  const double tr = std::abs(m_.trace() - cplx(1.0, 0.0));
  if (herm > tol || tr > tol)
    throw InvalidState("density matrix invalid: hermiticity error " + std::to_string(herm) +
                       ", trace error " + std::to_string(tr));
}

}  // namespace polsim
