#include "polsim/oracle.hpp"

#include "polsim/dephasing.hpp"
#include "polsim/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace polsim {
namespace {

// 1D rule in units of the axis standard deviation: positions u_i, weights W_i
// such that Int f(sigma u) sigma du ~ sigma * sum W_i f(sigma u_i).
struct Rule {
  std::vector<double> u;
  std::vector<double> w;
};

Rule trapezoid_rule(int n, double span) {
  Rule r;
  const double h = 2.0 * span / (n - 1);
  for (int i = 0; i < n; ++i) {
    r.u.push_back(-span + i * h);
    r.w.push_back(i == 0 || i == n - 1 ? 0.5 * h : h);
  }
  return r;
}

// Golub-Welsch nodes for weight exp(-x^2). The weights are returned already
// multiplied by exp(x_i^2) via the Christoffel sum over Hermite functions,
// which stays finite for any order.
Rule gauss_hermite_rule(int n) {
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n - 1);
  for (int i = 1; i < n; ++i) sub(i - 1) = std::sqrt(0.5 * i);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);

  Rule r;
  const double root2 = std::numbers::sqrt2;
  for (int i = 0; i < n; ++i) {
    const double x = es.eigenvalues()(i);
    double prev = 0.0;
    double cur = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
    double christoffel = cur * cur;
    for (int k = 0; k + 1 < n; ++k) {
      const double next = std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt(double(k) / (k + 1)) * prev;
      prev = cur;
      cur = next;
      christoffel += cur * cur;
    }
    // Axis amplitude ~ exp(-y^2 / (2 sigma^2)); y = sqrt(2) sigma x.
    r.u.push_back(root2 * x);
    r.w.push_back(root2 / christoffel);
  }
  return r;
}

Rule make_rule(const QuadratureSpec& spec) {
  return spec.scheme == QuadratureScheme::Trapezoid ? trapezoid_rule(spec.order, spec.span)
                                                    : gauss_hermite_rule(spec.order);
}

struct Axes {
  double sigma_s;  // along (1, 1)/sqrt2
  double sigma_d;  // along (1,-1)/sqrt2
};

// Principal standard deviations of the amplitude sqrt(P) (covariance 2C).
Axes amplitude_axes(const JointSpectrum& spectrum) {
  const double delta = delta_of(spectrum);
  const double k = k_of(spectrum);
  return {delta * std::sqrt(2.0 * (1.0 + k)), delta * std::sqrt(2.0 * (1.0 - k))};
}

Eigen::Vector2d reference_point(const JointSpectrum& spectrum) {
  const auto centers = peak_centers(spectrum);
  Eigen::Vector2d r = Eigen::Vector2d::Zero();
  for (const auto& c : centers) r += c;
  return r / static_cast<double>(centers.size());
}

void require_oracle_spectrum(const JointSpectrum& spectrum) {
  if (std::holds_alternative<DiscretePair>(spectrum))
    throw UnsupportedVariant("quadrature oracle needs a Gaussian spectrum");
  validate(spectrum);
  if (std::abs(k_of(spectrum)) >= 1.0)
    throw DomainError("quadrature oracle does not support |k| = 1 (singular covariance); use |k| < 1, "
                      "e.g. k = -0.99999");
}

// Largest phase rate along a principal axis for polarization pair p.
std::array<double, 2> phase_rates(PolPair p, double tau, const Medium& medium) {
  const double na = index_of(p.a, medium);
  const double nb = index_of(p.b, medium);
  return {std::abs(tau * (na + nb)) / std::numbers::sqrt2,
          std::abs(tau * (na - nb)) / std::numbers::sqrt2};
}

int order_for_rate(double rate, double sigma, const QuadratureSpec& spec) {
  const double period = 2.0 * std::numbers::pi / kMinNodesPerPeriod;  // max phase step per node
  if (rate * sigma == 0.0) return 16;
  if (spec.scheme == QuadratureScheme::Trapezoid) {
    // spacing = 2 span sigma / (n - 1)
    return std::max(16, static_cast<int>(std::ceil(2.0 * spec.span * sigma * rate / period)) + 1);
  }
  // Central Gauss-Hermite spacing ~ pi sigma / sqrt(n).
  const double root_n = std::numbers::pi * sigma * rate / period;
  return std::max(16, static_cast<int>(std::ceil(root_n * root_n)));
}

int required_order_for(std::initializer_list<PolPair> pairs, double tau, const JointSpectrum& spectrum,
                       const Medium& medium, const QuadratureSpec& spec) {
  const Axes ax = amplitude_axes(spectrum);
  int n = 16;
  for (PolPair p : pairs) {
    const auto rates = phase_rates(p, tau, medium);
    n = std::max({n, order_for_rate(rates[0], ax.sigma_s, spec), order_for_rate(rates[1], ax.sigma_d, spec)});
  }
  return n;
}

void check_resolution(std::initializer_list<PolPair> pairs, double tau, const JointSpectrum& spectrum,
                      const Medium& medium, const QuadratureSpec& spec) {
  const int need = required_order_for(pairs, tau, spectrum, medium, spec);
  if (spec.order < need)
    throw ResolutionError("quadrature order " + std::to_string(spec.order) +
                              " resolves fewer than 6 nodes per oscillation period at tau = " +
                              std::to_string(tau) + " fs; required order >= " + std::to_string(need),
                          need);
}

// Int g(w) exp(i tau (n_a w_a + n_b w_b)) with the carrier at the reference
// point stripped off (it cancels in every element).
cplx amplitude_integral(const std::vector<QuadratureNode>& nodes, PolPair p, double tau,
                        const Medium& medium) {
  const double na = index_of(p.a, medium);
  const double nb = index_of(p.b, medium);
  cplx sum{};
  for (const auto& n : nodes) sum += n.mass * std::polar(1.0, tau * (na * n.d_omega_a + nb * n.d_omega_b));
  return sum;
}

double total_mass(const std::vector<QuadratureNode>& nodes) {
  double m = 0.0;
  for (const auto& n : nodes) m += n.mass;
  return m;
}

// Carrier factor exp(i tau (n_l - n_l') r_a + i tau (n_m - n_m') r_b) that
// the offsets leave out.
cplx carrier(PolPair row, PolPair col, double tau, const Eigen::Vector2d& ref, const Medium& medium) {
  const double da = index_of(row.a, medium) - index_of(col.a, medium);
  const double db = index_of(row.b, medium) - index_of(col.b, medium);
  return std::polar(1.0, tau * (da * ref.x() + db * ref.y()));
}

// Full 4D sum for every (row, col): sum_ij a_i^row conj(a_j^col) E_ij.
Matrix4c finite_pump_sums(const std::vector<QuadratureNode>& nodes, double tau, const Medium& medium,
                          const Pump& pump) {
  const std::size_t m = nodes.size();
  std::array<std::vector<cplx>, 4> a;
  for (PolPair p : kBasis) {
    auto& v = a[p.index()];
    v.resize(m);
    const double na = index_of(p.a, medium);
    const double nb = index_of(p.b, medium);
    for (std::size_t i = 0; i < m; ++i)
      v[i] = nodes[i].mass * std::polar(1.0, tau * (na * nodes[i].d_omega_a + nb * nodes[i].d_omega_b));
  }
  Matrix4c out = Matrix4c::Zero();
  std::vector<double> row_kernel(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j)
      row_kernel[j] = kernel_E(nodes[i].d_omega_a - nodes[j].d_omega_a,
                               nodes[i].d_omega_b - nodes[j].d_omega_b, pump);
    for (int c = 0; c < 4; ++c) {
      cplx inner{};
      for (std::size_t j = 0; j < m; ++j) inner += row_kernel[j] * std::conj(a[c][j]);
      for (int r = 0; r < 4; ++r) out(r, c) += a[r][i] * inner;
    }
  }
  return out;
}

}  // namespace

void QuadratureSpec::validate() const {
  if (order < 16) throw DomainError("quadrature order must be >= 16");
  if (!(span >= 5.0)) throw DomainError("quadrature span must be >= 5");
}

std::vector<QuadratureNode> quadrature_nodes(const JointSpectrum& spectrum, const QuadratureSpec& spec,
                                             AmplitudeForm form) {
  require_oracle_spectrum(spectrum);
  spec.validate();
  const Axes ax = amplitude_axes(spectrum);
  const Eigen::Vector2d ref = reference_point(spectrum);
  const auto centers = peak_centers(spectrum);
  const double r2 = std::numbers::sqrt2;

  std::vector<QuadratureNode> nodes;
  auto add_patch = [&](const Eigen::Vector2d& off, const Rule& rs, const Rule& rd, auto&& integrand) {
    for (std::size_t i = 0; i < rs.u.size(); ++i) {
      const double s = ax.sigma_s * rs.u[i];
      for (std::size_t j = 0; j < rd.u.size(); ++j) {
        const double d = ax.sigma_d * rd.u[j];
        const double da = off.x() + (s + d) / r2;
        const double db = off.y() + (s - d) / r2;
        const double weight = rs.w[i] * rd.w[j] * ax.sigma_s * ax.sigma_d;
        nodes.push_back({da, db, weight * integrand(ref.x() + da, ref.y() + db)});
      }
    }
  };

  if (centers.size() == 1) {
    const Rule rule = make_rule(spec);
    add_patch(centers[0] - ref, rule, rule,
              [&](double wa, double wb) { return amplitude(spectrum, wa, wb, form); });
  } else if (form == AmplitudeForm::Separated) {
    // sqrt(P1) + sqrt(P2): each Gaussian term on its own patch.
    const Rule rule = make_rule(spec);
    for (std::size_t p = 0; p < centers.size(); ++p) {
      add_patch(centers[p] - ref, rule, rule, [&](double wa, double wb) {
        return std::exp(0.5 * peak_log_density(spectrum, p, wa, wb));
      });
    }
  } else {
    // sqrt(P1 + P2) is not a sum of Gaussians: one trapezoid window along the
    // separation axis spanning both peaks, node spacing kept at the per-peak value.
    if (spec.scheme != QuadratureScheme::Trapezoid)
      throw UnsupportedVariant("Gauss-Hermite nodes need Gaussian terms; use the trapezoid scheme for "
                               "the exact double-peak amplitude");
    const double half_sep = std::abs((centers[1] - centers[0]).dot(Eigen::Vector2d(1.0, -1.0))) / (2.0 * r2);
    const double half_width = spec.span + half_sep / ax.sigma_d;
    const int nd = static_cast<int>(std::ceil((spec.order - 1) * half_width / spec.span)) + 1;
    add_patch(Eigen::Vector2d::Zero(), trapezoid_rule(spec.order, spec.span), trapezoid_rule(nd, half_width),
              [&](double wa, double wb) { return amplitude(spectrum, wa, wb, form); });
  }
  return nodes;
}

int required_order(double tau, const JointSpectrum& spectrum, const Medium& medium,
                   const QuadratureSpec& spec) {
  require_oracle_spectrum(spectrum);
  return required_order_for({HH, HV, VH, VV}, tau, spectrum, medium, spec);
}

cplx element_quadrature(PolPair row, PolPair col, double tau, const JointSpectrum& spectrum,
                        const Medium& medium, const std::optional<Pump>& pump,
                        const QuadratureSpec& spec, AmplitudeForm form) {
  validate(medium);
  require_oracle_spectrum(spectrum);
  spec.validate();
  if (tau < 0.0) throw DomainError("interaction time must be non-negative");
  check_resolution({row, col}, tau, spectrum, medium, spec);

  const auto nodes = quadrature_nodes(spectrum, spec, form);
  const double a0 = total_mass(nodes);
  const cplx phase = carrier(row, col, tau, reference_point(spectrum), medium);
  if (!pump) {
    const cplx ar = amplitude_integral(nodes, row, tau, medium);
    const cplx ac = amplitude_integral(nodes, col, tau, medium);
    return 2.0 * phase * ar * std::conj(ac) / (a0 * a0);
  }
  const Matrix4c sums = finite_pump_sums(nodes, tau, medium, *pump);
  const double e0 = 1.0 / (4.0 * std::numbers::pi * pump->sigma * pump->sigma);
  return 2.0 * phase * sums(row.index(), col.index()) / (e0 * a0 * a0);
}

QuadratureMatrix full_matrix_quadrature(double tau, const JointSpectrum& spectrum, const Medium& medium,
                                        const std::optional<Pump>& pump, const QuadratureSpec& spec,
                                        AmplitudeForm form) {
  validate(medium);
  require_oracle_spectrum(spectrum);
  spec.validate();
  if (tau < 0.0) throw DomainError("interaction time must be non-negative");
  check_resolution({HH, HV, VH, VV}, tau, spectrum, medium, spec);

  const auto nodes = quadrature_nodes(spectrum, spec, form);
  const double a0 = total_mass(nodes);
  const Eigen::Vector2d ref = reference_point(spectrum);

  Matrix4c raw;
  if (!pump) {
    std::array<cplx, 4> amp;
    for (PolPair p : kBasis) amp[p.index()] = amplitude_integral(nodes, p, tau, medium);
    for (PolPair r : kBasis)
      for (PolPair c : kBasis) raw(r.index(), c.index()) = amp[r.index()] * std::conj(amp[c.index()]);
    raw *= 2.0 / (a0 * a0);
  } else {
    const double e0 = 1.0 / (4.0 * std::numbers::pi * pump->sigma * pump->sigma);
    raw = finite_pump_sums(nodes, tau, medium, *pump) * (2.0 / (e0 * a0 * a0));
  }
  for (PolPair r : kBasis)
    for (PolPair c : kBasis) raw(r.index(), c.index()) *= carrier(r, c, tau, ref, medium);

  QuadratureMatrix out;
  out.unnormalized = raw;
  out.max_asymmetry = (raw - raw.adjoint()).cwiseAbs().maxCoeff();
  out.rho = PolarizationMatrix::normalized(0.5 * (raw + raw.adjoint()));
  return out;
}

PolarizationMatrix dephasing_only_matrix(double tau, const JointSpectrum& spectrum, const Medium& medium,
                                         const QuadratureSpec& spec, AmplitudeForm form) {
  validate(medium);
  require_oracle_spectrum(spectrum);
  spec.validate();
  check_resolution({HH, HV, VH, VV}, tau, spectrum, medium, spec);
  const auto nodes = quadrature_nodes(spectrum, spec, form);
  const Eigen::Vector2d ref = reference_point(spectrum);

  // Weight |g|^2 per node: summing mass * g over every patch rebuilds g^2.
  Matrix4c m = Matrix4c::Zero();
  for (const auto& n : nodes) {
    const double g = amplitude(spectrum, ref.x() + n.d_omega_a, ref.y() + n.d_omega_b, form);
    for (PolPair r : kBasis) {
      for (PolPair c : kBasis) {
        const double da = index_of(r.a, medium) - index_of(c.a, medium);
        const double db = index_of(r.b, medium) - index_of(c.b, medium);
        m(r.index(), c.index()) += n.mass * g * std::polar(1.0, tau * (da * n.d_omega_a + db * n.d_omega_b));
      }
    }
  }
  for (PolPair r : kBasis)
    for (PolPair c : kBasis) m(r.index(), c.index()) *= carrier(r, c, tau, ref, medium);
  return PolarizationMatrix::normalized(0.5 * (m + m.adjoint()));
}

}  // namespace polsim
