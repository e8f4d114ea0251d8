#pragma once

// Entropic correlations of two-qubit states: mutual information, classical
// correlation, conditional entropy under projective measurements on the
// first qubit, quantum discord, concurrence and entanglement of formation.
// All entropies are in bits.

#include <Eigen/Dense>
#include <array>

#include "mcsd/states.hpp"

namespace mcsd {

// Direction (theta, phi) of a von Neumann measurement on qubit 1; outcome k
// has Bloch vector (-1)^k (sin t cos f, sin t sin f, cos t).
struct MeasurementBasis {
  double theta = 0.0;
  double phi = 0.0;

  Eigen::Vector3d direction() const;
};

struct CorrelationReport {
  double mutual_info = 0.0;
  double classical_corr = 0.0;
  double discord = 0.0;
  double concurrence = 0.0;
  double eof = 0.0;
  double s_cond_min = 0.0;
  MeasurementBasis argmin;
};

double binary_entropy(double x);

// H(1/2 + 1/2 sqrt(1 - C^2)).
double entanglement_of_formation(double concurrence);

double von_neumann_entropy(const Matrix2c& rho);
// Uses the analytic block eigenvalues when the state has X structure.
double von_neumann_entropy(const TwoQubitState& state);

// Spectrum through the general Hermitian eigensolver, ascending.
Eigen::Vector4d eigenvalues_general(const TwoQubitState& state);
// Spectrum of an X state from its two 2x2 blocks, ascending.
Eigen::Vector4d eigenvalues_x(const TwoQubitState& state);
// The two nonzero eigenvalues {lambda_+, lambda_-} of rho_12 in closed form.
std::array<double, 2> rho12_eigenvalues(const SuperpositionSpec& spec);
// Marginal eigenvalues {lambda_1+, lambda_1-}, equal for both qubits.
std::array<double, 2> rho12_marginal_eigenvalues(const SuperpositionSpec& spec);

// --- pure k|(n-k) bipartition ----------------------------------------------

double concurrence_pure(const PureBipartition& bp);
// For pure states discord and entanglement of formation coincide.
CorrelationReport discord_pure(const PureBipartition& bp);

// --- concurrence -------------------------------------------------------------

// 2 max{0, |rho_14| - sqrt(rho_22 rho_33), |rho_23| - sqrt(rho_11 rho_44)} for
// X states, otherwise the general Wootters spectrum.
double concurrence_x(const TwoQubitState& state);
// max{0, l1 - l2 - l3 - l4} with l_i the decreasing square roots of the
// spectrum of rho (s_y x s_y) rho* (s_y x s_y).
double wootters_concurrence(const TwoQubitState& state);

// --- mixed two-site reduction rho_12 ----------------------------------------

double mutual_information(const SuperpositionSpec& spec);
double mutual_information(const TwoQubitState& state);

double conditional_entropy(const BlochMatrix& bloch, const MeasurementBasis& basis);
double conditional_entropy(const TwoQubitState& state, const MeasurementBasis& basis);

// |C(rho_23)|^2 for the complement of rho_12 in its purification.
double rho23_concurrence_squared(const SuperpositionSpec& spec);
// Minimal conditional entropy as the entanglement of formation of rho_23.
double koashi_winter_min(const SuperpositionSpec& spec);

CorrelationReport discord_mixed_closed(const SuperpositionSpec& spec);

// Three-qubit purification sqrt(l+) |phi+>|0> + sqrt(l-) |phi->|1>, index
// 4*q1 + 2*q2 + q3.
Eigen::Matrix<Complex, 8, 1> purification(const SuperpositionSpec& spec);

// Discord of the W-state two-site reduction.
double werner_discord(int n);

// --- brute-force oracle -----------------------------------------------------

struct GridSpec {
  int n_theta = 181;  // theta in [0, pi], endpoints included
  int n_phi = 361;    // phi in [0, 2 pi], endpoints included

  double theta_step() const;
  double phi_step() const;
};

struct MinimizeResult {
  double value = 0.0;
  MeasurementBasis argmin;
  // Best point of the coarse grid before refinement.
  double grid_value = 0.0;
  MeasurementBasis grid_argmin;
};

inline constexpr double kDefaultRefineTol = 1e-10;

// Exhaustive grid over (theta, phi) followed by coordinate descent with
// golden-section line searches.
MinimizeResult minimize_conditional_entropy(const BlochMatrix& bloch, const GridSpec& grid = {},
                                            double refine_tol = kDefaultRefineTol);

// Discord with the conditional entropy minimized numerically over
// projective measurements. For states of rank > 2 this is an upper bound on
// the POVM discord.
CorrelationReport discord_brute_force(const TwoQubitState& state, const GridSpec& grid = {},
                                      double refine_tol = kDefaultRefineTol);

}  // namespace mcsd
