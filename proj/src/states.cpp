#include "mcsd/states.hpp"

#include <cmath>

#include "mcsd/error.hpp"

namespace mcsd {

std::string to_string(Parity parity) { return parity == Parity::Even ? "even" : "odd"; }

SuperpositionSpec::SuperpositionSpec(double p, Parity parity, int n,
                                     std::optional<Provenance> provenance)
    : p_(p), parity_(parity), n_(n), provenance_(std::move(provenance)) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("overlap p must lie in [0, 1], got " + std::to_string(p));
  }
  if (n < 2) throw DomainError("particle count n must be >= 2, got " + std::to_string(n));
}

SuperpositionSpec SuperpositionSpec::from_overlap(const OverlapP& overlap, Parity parity,
                                                  int n) {
  return SuperpositionSpec(overlap.value, parity, n, Provenance{overlap.algebra, overlap.z});
}

double one_plus_signed_pow(double p, int m, double sign) {
  if (sign < 0.0 && p > 0.0) return -std::expm1(m * std::log(p));
  return 1.0 + sign * std::pow(p, m);
}

double SuperpositionSpec::q() const { return std::pow(p_, n_ - 2); }

void SuperpositionSpec::require_nondegenerate() const {
  if (is_degenerate()) {
    throw LimitRequiredError(
        "p = 1 with odd parity has no normalizable superposition; use the Werner-limit "
        "operations");
  }
}

double normalization(const SuperpositionSpec& spec) {
  spec.require_nondegenerate();
  return 1.0 / std::sqrt(2.0 * one_plus_signed_pow(spec.p(), spec.n(), spec.cos_m_pi()));
}

PureBipartition pure_bipartition(const SuperpositionSpec& spec, int k) {
  spec.require_nondegenerate();
  const int n = spec.n();
  if (k < 1 || k > n - 1) {
    throw DomainError("bipartition size k must lie in [1, n-1], got " + std::to_string(k));
  }
  const double norm = normalization(spec);
  const double c = spec.cos_m_pi();
  const double pk = std::pow(spec.p(), k);
  const double prest = std::pow(spec.p(), n - k);

  PureBipartition bp;
  bp.k = k;
  bp.n = n;
  bp.p = spec.p();
  bp.parity = spec.parity();
  bp.a_k = std::sqrt((1.0 + pk) / 2.0);
  bp.b_k = std::sqrt(one_plus_signed_pow(spec.p(), k, -1.0) / 2.0);
  bp.a_rest = std::sqrt((1.0 + prest) / 2.0);
  bp.b_rest = std::sqrt(one_plus_signed_pow(spec.p(), n - k, -1.0) / 2.0);
  bp.c00 = norm * (1.0 + c) * bp.a_k * bp.a_rest;
  bp.c01 = norm * (1.0 - c) * bp.a_k * bp.b_rest;
  bp.c10 = norm * (1.0 - c) * bp.a_rest * bp.b_k;
  bp.c11 = norm * (1.0 + c) * bp.b_k * bp.b_rest;
  return bp;
}

TwoQubitState::TwoQubitState(const Matrix4c& matrix) : matrix_(matrix) {
  const double herm_err = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (herm_err > kHermitianTol) {
    throw DomainError("density matrix is not Hermitian (max deviation " +
                      std::to_string(herm_err) + ")");
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw DomainError("density matrix trace is " + std::to_string(tr.real()) + ", expected 1");
  }
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(matrix_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kPsdTol) {
    throw DomainError("density matrix is not positive semidefinite");
  }
}

bool TwoQubitState::is_x_state(double tol) const {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == j || i + j == 3) continue;
      if (std::abs(matrix_(i, j)) > tol) return false;
    }
  }
  return true;
}

Matrix2c TwoQubitState::marginal_first() const {
  Matrix2c m;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) m(a, b) = matrix_(2 * a, 2 * b) + matrix_(2 * a + 1, 2 * b + 1);
  return m;
}

Matrix2c TwoQubitState::marginal_second() const {
  Matrix2c m;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) m(a, b) = matrix_(a, b) + matrix_(a + 2, b + 2);
  return m;
}

TwoQubitState TwoQubitState::maximally_mixed() {
  return TwoQubitState(Matrix4c::Identity() / 4.0);
}

TwoQubitState TwoQubitState::pure(const Eigen::Vector4cd& psi) {
  const Eigen::Vector4cd v = psi.normalized();
  return TwoQubitState(v * v.adjoint());
}

const std::array<Matrix2c, 4>& pauli_matrices() {
  static const std::array<Matrix2c, 4> sigma = [] {
    const Complex i{0.0, 1.0};
    std::array<Matrix2c, 4> s;
    s[0] << 1, 0, 0, 1;
    s[1] << 0, 1, 1, 0;
    s[2] << 0, -i, i, 0;
    s[3] << 1, 0, 0, -1;
    return s;
  }();
  return sigma;
}

namespace {

Matrix4c kron(const Matrix2c& a, const Matrix2c& b) {
  Matrix4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

}  // namespace

Matrix4c BlochMatrix::reconstruct() const {
  const auto& s = pauli_matrices();
  Matrix4c rho = Matrix4c::Zero();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) rho += r(a, b) * kron(s[a], s[b]);
  return rho / 4.0;
}

BlochMatrix bloch_matrix(const TwoQubitState& state) {
  const auto& s = pauli_matrices();
  BlochMatrix out;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      out.r(a, b) = (state.matrix() * kron(s[a], s[b])).trace().real();
  return out;
}

TwoQubitState reduced_rho12(const SuperpositionSpec& spec) {
  spec.require_nondegenerate();
  const double norm = normalization(spec);
  const double n2 = norm * norm;
  const double c = spec.cos_m_pi();
  const double plus_qc = one_plus_signed_pow(spec.p(), spec.n() - 2, c);
  const double minus_qc = one_plus_signed_pow(spec.p(), spec.n() - 2, -c);
  const double a2 = (1.0 + spec.p()) / 2.0;
  const double b2 = (1.0 - spec.p()) / 2.0;

  const double corner = 2.0 * n2 * a2 * b2 * plus_qc;
  const double middle = 2.0 * n2 * a2 * b2 * minus_qc;

  Matrix4c m = Matrix4c::Zero();
  m(0, 0) = 2.0 * n2 * a2 * a2 * plus_qc;
  m(3, 3) = 2.0 * n2 * b2 * b2 * plus_qc;
  m(0, 3) = m(3, 0) = corner;
  m(1, 1) = m(2, 2) = m(1, 2) = m(2, 1) = middle;
  return TwoQubitState(m);
}

TwoQubitState werner_limit_state(int n) {
  if (n < 2) throw DomainError("Werner limit requires n >= 2");
  const double inv = 1.0 / n;
  Matrix4c m = Matrix4c::Zero();
  m(0, 0) = static_cast<double>(n - 2) * inv;
  m(1, 1) = m(2, 2) = m(1, 2) = m(2, 1) = inv;
  return TwoQubitState(m);
}

}  // namespace mcsd
