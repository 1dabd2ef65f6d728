#pragma once

// Two-qubit polarization states in basis order (HH, HV, VH, VV).

#include <Eigen/Core>

#include <array>
#include <complex>
#include <string>

namespace polsim {

using cplx = std::complex<double>;
using Matrix4c = Eigen::Matrix<cplx, 4, 4>;
using Vector4c = Eigen::Matrix<cplx, 4, 1>;

enum class Pol { H = 0, V = 1 };

struct PolPair {
  Pol a = Pol::H;
  Pol b = Pol::H;

  constexpr int index() const noexcept { return 2 * static_cast<int>(a) + static_cast<int>(b); }
  static constexpr PolPair from_index(int i) noexcept {
    return {static_cast<Pol>(i / 2), static_cast<Pol>(i % 2)};
  }
  friend constexpr bool operator==(PolPair, PolPair) = default;
};

inline constexpr PolPair HH{Pol::H, Pol::H};
inline constexpr PolPair HV{Pol::H, Pol::V};
inline constexpr PolPair VH{Pol::V, Pol::H};
inline constexpr PolPair VV{Pol::V, Pol::V};
inline constexpr std::array<PolPair, 4> kBasis{HH, HV, VH, VV};

std::string to_string(PolPair p);
/// Parses "HH", "hv", ... Throws std::invalid_argument.
PolPair parse_pol_pair(const std::string& s);

/// Invariant residuals of a density matrix.
struct StateDiagnostics {
  double hermiticity_error = 0.0;  ///< max |rho - rho^dagger|
  double trace_error = 0.0;        ///< |tr rho - 1|
  double min_eigenvalue = 0.0;

  bool valid(double herm_tol = 1e-12, double trace_tol = 1e-12, double eig_tol = 1e-10) const {
    return hermiticity_error <= herm_tol && trace_error <= trace_tol && min_eigenvalue >= -eig_tol;
  }
};

/// 4x4 polarization density matrix. Construction does not validate; call
/// diagnostics() or require_valid() where the invariants matter.
class PolarizationMatrix {
 public:
  PolarizationMatrix() : m_(Matrix4c::Zero()) {}
  explicit PolarizationMatrix(const Matrix4c& m) : m_(m) {}

  static PolarizationMatrix from_pure(const Vector4c& psi);
  /// Divides by the real trace. Throws NumericalError if the trace is not positive.
  static PolarizationMatrix normalized(const Matrix4c& unnormalized);

  const Matrix4c& matrix() const noexcept { return m_; }
  cplx operator()(int row, int col) const { return m_(row, col); }
  cplx operator()(PolPair row, PolPair col) const { return m_(row.index(), col.index()); }

  StateDiagnostics diagnostics() const;
  /// Throws InvalidState when hermiticity or trace exceed `tol`.
  void require_valid(double tol = 1e-10) const;

 private:
  Matrix4c m_;
};

}  // namespace polsim
