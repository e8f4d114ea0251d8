#include "mcsd/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mcsd/error.hpp"

namespace mcsd {

namespace {

constexpr double kEntropySlack = 1e-12;

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

double entropy_of_spectrum(const double* values, int count) {
  double s = 0.0;
  for (int i = 0; i < count; ++i) {
    if (values[i] < -TwoQubitState::kPsdTol) {
      throw DomainError("entropy of a non-positive density matrix");
    }
    s -= xlog2x(std::max(values[i], 0.0));
  }
  return s;
}

// Eigenvalues of the Hermitian 2x2 matrix [[a, b], [conj(b), d]], ascending.
std::array<double, 2> hermitian2_eigenvalues(double a, double d, double abs_b) {
  const double mean = 0.5 * (a + d);
  const double radius = std::hypot(0.5 * (a - d), abs_b);
  return {mean - radius, mean + radius};
}

}  // namespace

Eigen::Vector3d MeasurementBasis::direction() const {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

double binary_entropy(double x) {
  if (!(x >= -kEntropySlack && x <= 1.0 + kEntropySlack)) {
    throw DomainError("binary entropy argument outside [0, 1]: " + std::to_string(x));
  }
  x = std::clamp(x, 0.0, 1.0);
  return -xlog2x(x) - xlog2x(1.0 - x);
}

double entanglement_of_formation(double concurrence) {
  const double c2 = std::clamp(concurrence * concurrence, 0.0, 1.0);
  return binary_entropy(0.5 + 0.5 * std::sqrt(1.0 - c2));
}

double von_neumann_entropy(const Matrix2c& rho) {
  const auto ev = hermitian2_eigenvalues(rho(0, 0).real(), rho(1, 1).real(), std::abs(rho(0, 1)));
  return entropy_of_spectrum(ev.data(), 2);
}

Eigen::Vector4d eigenvalues_general(const TwoQubitState& state) {
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(state.matrix(), Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

Eigen::Vector4d eigenvalues_x(const TwoQubitState& state) {
  const auto& m = state.matrix();
  const auto outer = hermitian2_eigenvalues(m(0, 0).real(), m(3, 3).real(), std::abs(m(0, 3)));
  const auto inner = hermitian2_eigenvalues(m(1, 1).real(), m(2, 2).real(), std::abs(m(1, 2)));
  Eigen::Vector4d ev{outer[0], outer[1], inner[0], inner[1]};
  std::sort(ev.data(), ev.data() + 4);
  return ev;
}

double von_neumann_entropy(const TwoQubitState& state) {
  const Eigen::Vector4d ev = state.is_x_state() ? eigenvalues_x(state) : eigenvalues_general(state);
  return entropy_of_spectrum(ev.data(), 4);
}

std::array<double, 2> rho12_eigenvalues(const SuperpositionSpec& spec) {
  spec.require_nondegenerate();
  const double p = spec.p();
  const double c = spec.cos_m_pi();
  const int n = spec.n();
  const double den = one_plus_signed_pow(p, n, c);
  return {0.5 * (1.0 + p * p) * one_plus_signed_pow(p, n - 2, c) / den,
          0.5 * one_plus_signed_pow(p, 2, -1.0) * one_plus_signed_pow(p, n - 2, -c) / den};
}

std::array<double, 2> rho12_marginal_eigenvalues(const SuperpositionSpec& spec) {
  spec.require_nondegenerate();
  const double p = spec.p();
  const double c = spec.cos_m_pi();
  const int n = spec.n();
  const double den = one_plus_signed_pow(p, n, c);
  return {0.5 * (1.0 + p) * one_plus_signed_pow(p, n - 1, c) / den,
          0.5 * (1.0 - p) * one_plus_signed_pow(p, n - 1, -c) / den};
}

double concurrence_pure(const PureBipartition& bp) {
  return 2.0 * std::abs(bp.c00 * bp.c11 - bp.c10 * bp.c01);
}

CorrelationReport discord_pure(const PureBipartition& bp) {
  const double c = parity_sign(bp.parity);
  const double pk = std::pow(bp.p, bp.k);
  const double prest = std::pow(bp.p, bp.n - bp.k);
  const double pn = std::pow(bp.p, bp.n);
  const double entropy = binary_entropy(0.5 + 0.5 * (pk + prest * c) / (1.0 + pn * c));

  CorrelationReport r;
  r.discord = entropy;
  r.eof = entropy;
  r.mutual_info = 2.0 * entropy;
  r.classical_corr = entropy;
  r.s_cond_min = 0.0;
  r.concurrence = concurrence_pure(bp);
  r.argmin = {0.0, 0.0};  // every measurement leaves a pure conditional state
  return r;
}

double concurrence_x(const TwoQubitState& state) {
  if (!state.is_x_state()) return wootters_concurrence(state);
  const auto& m = state.matrix();
  const double l1 = std::abs(m(0, 3)) - std::sqrt(std::max(0.0, m(1, 1).real() * m(2, 2).real()));
  const double l2 = std::abs(m(1, 2)) - std::sqrt(std::max(0.0, m(0, 0).real() * m(3, 3).real()));
  return 2.0 * std::max({0.0, l1, l2});
}

double wootters_concurrence(const TwoQubitState& state) {
  // rho = W W^dag, rho~ = W~ W~^dag with W~ = (s_y x s_y) W*. The nonzero
  // spectrum of rho rho~ is the squared singular values of W^dag W~, which
  // avoids square roots of noisy near-zero eigenvalues of rho rho~.
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(state.matrix());
  const Eigen::Vector4d mu = solver.eigenvalues().cwiseMax(0.0);
  const Matrix4c w = solver.eigenvectors() * mu.cwiseSqrt().cast<Complex>().asDiagonal();

  Matrix4c flip = Matrix4c::Zero();
  flip(0, 3) = flip(3, 0) = -1.0;
  flip(1, 2) = flip(2, 1) = 1.0;
  const Matrix4c w_tilde = flip * w.conjugate();

  Eigen::JacobiSVD<Matrix4c> svd(w.adjoint() * w_tilde);
  const Eigen::Vector4d s = svd.singularValues();  // decreasing
  return std::max(0.0, s(0) - s(1) - s(2) - s(3));
}

double mutual_information(const SuperpositionSpec& spec) {
  const double s1 = binary_entropy(rho12_marginal_eigenvalues(spec)[0]);
  const double s12 = binary_entropy(rho12_eigenvalues(spec)[0]);
  return 2.0 * s1 - s12;
}

double mutual_information(const TwoQubitState& state) {
  return von_neumann_entropy(state.marginal_first()) + von_neumann_entropy(state.marginal_second()) -
         von_neumann_entropy(state);
}

double conditional_entropy(const BlochMatrix& bloch, const MeasurementBasis& basis) {
  const Eigen::Vector3d s = basis.direction();
  const Eigen::Matrix4d& r = bloch.r;
  double total = 0.0;
  for (const double sign : {1.0, -1.0}) {
    // Unnormalized Bloch 4-vector of qubit 2 after outcome k: b_beta.
    Eigen::Vector4d b = r.row(0).transpose();
    b += sign * (s(0) * r.row(1) + s(1) * r.row(2) + s(2) * r.row(3)).transpose();
    const double prob = 0.5 * b(0);
    if (prob <= 0.0) continue;
    const double det = std::clamp(0.25 * (1.0 - b.tail<3>().squaredNorm() / (b(0) * b(0))), 0.0, 0.25);
    total += prob * binary_entropy(0.5 + 0.5 * std::sqrt(1.0 - 4.0 * det));
  }
  return total;
}

double conditional_entropy(const TwoQubitState& state, const MeasurementBasis& basis) {
  return conditional_entropy(bloch_matrix(state), basis);
}

double rho23_concurrence_squared(const SuperpositionSpec& spec) {
  spec.require_nondegenerate();
  const double p = spec.p();
  const double den = one_plus_signed_pow(p, spec.n(), spec.cos_m_pi());
  return p * p * one_plus_signed_pow(p, 2, -1.0) * one_plus_signed_pow(p, 2 * spec.n() - 4, -1.0) /
         (den * den);
}

double koashi_winter_min(const SuperpositionSpec& spec) {
  const double c2 = std::clamp(rho23_concurrence_squared(spec), 0.0, 1.0);
  return binary_entropy(0.5 + 0.5 * std::sqrt(1.0 - c2));
}

CorrelationReport discord_mixed_closed(const SuperpositionSpec& spec) {
  spec.require_nondegenerate();
  const double s1 = binary_entropy(rho12_marginal_eigenvalues(spec)[0]);
  const double s12 = binary_entropy(rho12_eigenvalues(spec)[0]);
  const double s_min = koashi_winter_min(spec);
  const double p = spec.p();

  CorrelationReport r;
  r.mutual_info = 2.0 * s1 - s12;
  r.s_cond_min = s_min;
  r.discord = s1 + s_min - s12;
  r.classical_corr = r.mutual_info - r.discord;
  // (q - p^n) = q (1 - p^2)
  r.concurrence = spec.q() * one_plus_signed_pow(p, 2, -1.0) /
                  one_plus_signed_pow(p, spec.n(), spec.cos_m_pi());
  r.eof = entanglement_of_formation(r.concurrence);
  r.argmin = {std::numbers::pi / 2.0, 0.0};
  return r;
}

Eigen::Matrix<Complex, 8, 1> purification(const SuperpositionSpec& spec) {
  const auto [lp, lm] = rho12_eigenvalues(spec);
  const double p = spec.p();
  const double norm_plus = 1.0 / std::sqrt(2.0 * (1.0 + p * p));
  const double norm_minus = 1.0 / std::sqrt(2.0);

  Eigen::Matrix<Complex, 8, 1> psi = Eigen::Matrix<Complex, 8, 1>::Zero();
  // phi_+ (x) |0>: components on |000> and |110>.
  psi(0) = std::sqrt(lp) * norm_plus * (1.0 + p);
  psi(6) = std::sqrt(lp) * norm_plus * (1.0 - p);
  // phi_- (x) |1>: components on |011> and |101>.
  psi(3) = std::sqrt(std::max(lm, 0.0)) * norm_minus;
  psi(5) = std::sqrt(std::max(lm, 0.0)) * norm_minus;
  return psi;
}

double werner_discord(int n) {
  if (n < 2) throw DomainError("werner_discord requires n >= 2");
  const double x = static_cast<double>(n);
  return binary_entropy(1.0 - 1.0 / x) +
         binary_entropy(0.5 + 0.5 * std::sqrt(x * x - 4.0 * x + 8.0) / x) -
         binary_entropy(1.0 - 2.0 / x);
}

CorrelationReport discord_brute_force(const TwoQubitState& state, const GridSpec& grid,
                                      double refine_tol) {
  const MinimizeResult min = minimize_conditional_entropy(bloch_matrix(state), grid, refine_tol);
  const double s1 = von_neumann_entropy(state.marginal_first());
  const double s2 = von_neumann_entropy(state.marginal_second());
  const double s12 = von_neumann_entropy(state);

  CorrelationReport r;
  r.mutual_info = s1 + s2 - s12;
  r.s_cond_min = min.value;
  r.discord = s1 + min.value - s12;
  r.classical_corr = r.mutual_info - r.discord;
  r.concurrence = concurrence_x(state);
  r.eof = entanglement_of_formation(r.concurrence);
  r.argmin = min.argmin;
  return r;
}

}  // namespace mcsd
