#pragma once

// Local dephasing of both qubits of rho_12 and the resulting decay of
// concurrence (with finite-time sudden death) and discord.

#include <array>
#include <vector>

#include "mcsd/correlations.hpp"
#include "mcsd/states.hpp"

namespace mcsd {

// Single-qubit dephasing with gamma = 1 - exp(-rate t). Kraus elements
// E0 = diag(1, sqrt(1 - gamma)) and E1 = diag(0, sqrt(gamma)).
class DephasingChannel {
 public:
  DephasingChannel(double gamma_rate, double t);

  double gamma_rate() const { return rate_; }
  double t() const { return t_; }
  double gamma() const { return gamma_; }

  const std::array<Matrix2c, 2>& kraus() const { return kraus_; }
  // Two-qubit elements E_mu (x) E_nu, index 2*mu + nu.
  std::array<Matrix4c, 4> kraus_two_qubit() const;

 private:
  double rate_;
  double t_;
  double gamma_;
  std::array<Matrix2c, 2> kraus_;
};

// rho(t) = sum_{mu,nu} E_{mu nu} rho E_{mu nu}^dag.
TwoQubitState apply_dephasing(const TwoQubitState& state, const DephasingChannel& channel);

// Closed-form concurrence of the dephased rho_12; exactly zero for t >= t0.
double concurrence_t(const SuperpositionSpec& spec, const DephasingChannel& channel);

// t0 = ln[(1 + p^(n-2)) / (1 - p^(n-2))] / rate; +infinity when p^(n-2) = 1.
double sudden_death_time(const SuperpositionSpec& spec, double gamma_rate);

// Brute-force projective discord of the dephased rho_12.
double discord_t(const SuperpositionSpec& spec, const DephasingChannel& channel,
                 const GridSpec& grid = {});

// Uniform grid over [0, multiple * t0], or [0, 5 / rate] when t0 is zero or
// infinite.
std::vector<double> default_time_grid(const SuperpositionSpec& spec, double gamma_rate,
                                      int steps = 200, double multiple_of_t0 = 3.0);

}  // namespace mcsd
