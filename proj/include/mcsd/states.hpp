#pragma once

// Balanced superpositions |z,m,n> = N (|z>^n + e^{i m pi} |-z>^n) and their
// two qubit mappings: the pure k|(n-k) bipartition and the two-site reduced
// density matrix rho_12.

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <optional>
#include <string>

#include "mcsd/coherent.hpp"

namespace mcsd {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;

enum class Parity { Even, Odd };

// cos(m pi) for the parity of m.
constexpr double parity_sign(Parity parity) { return parity == Parity::Even ? 1.0 : -1.0; }
std::string to_string(Parity parity);

struct Provenance {
  AlgebraSpec algebra;
  Complex z;
};

// The correlation formulas depend on the superposition only through the
// overlap p, the parity of m and the particle count n.
class SuperpositionSpec {
 public:
  SuperpositionSpec(double p, Parity parity, int n, std::optional<Provenance> provenance = {});
  static SuperpositionSpec from_overlap(const OverlapP& overlap, Parity parity, int n);

  double p() const { return p_; }
  Parity parity() const { return parity_; }
  int n() const { return n_; }
  double cos_m_pi() const { return parity_sign(parity_); }
  // q = p^(n-2), the weight of the cross terms of rho_12.
  double q() const;
  const std::optional<Provenance>& provenance() const { return provenance_; }

  // p = 1 with odd m: the two branches cancel.
  bool is_degenerate() const { return p_ == 1.0 && parity_ == Parity::Odd; }
  // Throws LimitRequiredError for the degenerate case.
  void require_nondegenerate() const;

 private:
  double p_;
  Parity parity_;
  int n_;
  std::optional<Provenance> provenance_;
};

// 1 + sign * p^m, computed without cancellation as p^m -> 1.
double one_plus_signed_pow(double p, int m, double sign);

// N = [2 + 2 p^n cos(m pi)]^(-1/2).
double normalization(const SuperpositionSpec& spec);

struct PureBipartition {
  int k = 1;
  int n = 2;
  double p = 0.0;
  Parity parity = Parity::Even;
  // Amplitudes on |a>_k |b>_{n-k}.
  double c00 = 0.0, c01 = 0.0, c10 = 0.0, c11 = 0.0;
  // Logical-basis coordinates of |z>_l: a_l = sqrt((1+p^l)/2), b_l = sqrt((1-p^l)/2).
  double a_k = 0.0, b_k = 0.0, a_rest = 0.0, b_rest = 0.0;

  Eigen::Vector4d amplitudes() const { return {c00, c01, c10, c11}; }
};

PureBipartition pure_bipartition(const SuperpositionSpec& spec, int k);

// A two-qubit density matrix in the basis {|00>, |01>, |10>, |11>}.
class TwoQubitState {
 public:
  static constexpr double kHermitianTol = 1e-12;
  static constexpr double kTraceTol = 1e-12;
  static constexpr double kPsdTol = 1e-10;

  // Validates Hermiticity, unit trace and positivity; throws DomainError.
  explicit TwoQubitState(const Matrix4c& matrix);

  const Matrix4c& matrix() const { return matrix_; }
  Complex operator()(int row, int col) const { return matrix_(row, col); }

  // True when every entry off the main and anti-diagonal vanishes.
  bool is_x_state(double tol = 1e-14) const;

  // Reduced state of the first (measured) and second qubit.
  Matrix2c marginal_first() const;
  Matrix2c marginal_second() const;

  static TwoQubitState maximally_mixed();
  static TwoQubitState pure(const Eigen::Vector4cd& psi);

 private:
  Matrix4c matrix_;
};

// Pauli matrices sigma^0 = identity, sigma^1..3 = x, y, z.
const std::array<Matrix2c, 4>& pauli_matrices();

// R_ab = Tr[rho sigma^a (x) sigma^b], so rho = 1/4 sum_ab R_ab sigma^a (x) sigma^b.
struct BlochMatrix {
  Eigen::Matrix4d r = Eigen::Matrix4d::Zero();

  double operator()(int a, int b) const { return r(a, b); }
  Matrix4c reconstruct() const;
};

BlochMatrix bloch_matrix(const TwoQubitState& state);

// Two-site reduction of the superposition, mapped onto even/odd coherent
// state qubits.
TwoQubitState reduced_rho12(const SuperpositionSpec& spec);

// Two-site reduction of the n-qubit W state, the p -> 1 limit of the
// antisymmetric superposition.
TwoQubitState werner_limit_state(int n);

}  // namespace mcsd
