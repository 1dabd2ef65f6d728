#pragma once

#include "polsim/polarization.hpp"

#include <array>

namespace polsim {

/// sigma_y (x) sigma_y in the (HH, HV, VH, VV) basis: anti-diagonal (-1, 1, 1, -1).
Matrix4c spin_flip();

/// rho~ = (sigma_y x sigma_y) rho* (sigma_y x sigma_y)
Matrix4c spin_flipped(const Matrix4c& rho);

/// Wootters concurrence in [0, 1].
///
/// The lambdas are taken as singular values of W^T (sigma_y x sigma_y) W with
/// rho = W W^dagger built from the eigenpairs of rho above `rank_tol`. This
/// avoids square roots of near-zero eigenvalues, which would otherwise cost
/// ~1e-8 in accuracy close to pure states. Throws InvalidState if rho is not
/// Hermitian with unit trace within 1e-10.
double concurrence(const PolarizationMatrix& rho, double rank_tol = 1e-14);

/// Descending eigenvalues of sqrt(rho) rho~ sqrt(rho) (the spectrum of
/// rho rho~), unclamped.
std::array<double, 4> wootters_eigenvalues(const PolarizationMatrix& rho);

/// Descending lambdas: square roots of wootters_eigenvalues, negatives as 0.
std::array<double, 4> wootters_lambdas(const PolarizationMatrix& rho);

/// Concurrence from wootters_lambdas (the Hermitian route).
double concurrence_hermitian(const PolarizationMatrix& rho);

/// Tr rho^2
double purity(const PolarizationMatrix& rho);

}  // namespace polsim
