#include "mcsd/dynamics.hpp"

#include <cmath>
#include <limits>

#include "mcsd/error.hpp"

namespace mcsd {

DephasingChannel::DephasingChannel(double gamma_rate, double t) : rate_(gamma_rate), t_(t) {
  if (!(gamma_rate >= 0.0) || !std::isfinite(gamma_rate)) {
    throw DomainError("dephasing rate must be finite and >= 0");
  }
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("time must be finite and >= 0");
  gamma_ = -std::expm1(-rate_ * t_);

  kraus_[0] << 1.0, 0.0, 0.0, std::sqrt(1.0 - gamma_);
  kraus_[1] << 0.0, 0.0, 0.0, std::sqrt(gamma_);
  const Matrix2c completeness =
      kraus_[0].adjoint() * kraus_[0] + kraus_[1].adjoint() * kraus_[1];
  if ((completeness - Matrix2c::Identity()).cwiseAbs().maxCoeff() > 1e-14) {
    throw NumericError("dephasing Kraus elements are not trace preserving");
  }
}

std::array<Matrix4c, 4> DephasingChannel::kraus_two_qubit() const {
  std::array<Matrix4c, 4> out;
  for (int mu = 0; mu < 2; ++mu) {
    for (int nu = 0; nu < 2; ++nu) {
      Matrix4c e;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) e.block<2, 2>(2 * i, 2 * j) = kraus_[mu](i, j) * kraus_[nu];
      out[2 * mu + nu] = e;
    }
  }
  return out;
}

TwoQubitState apply_dephasing(const TwoQubitState& state, const DephasingChannel& channel) {
  Matrix4c out = Matrix4c::Zero();
  for (const Matrix4c& e : channel.kraus_two_qubit()) out += e * state.matrix() * e.adjoint();
  return TwoQubitState(out);
}

double sudden_death_time(const SuperpositionSpec& spec, double gamma_rate) {
  if (!(gamma_rate > 0.0)) throw DomainError("sudden_death_time requires a positive rate");
  const double q = spec.q();
  if (q >= 1.0) return std::numeric_limits<double>::infinity();
  return (std::log1p(q) - std::log1p(-q)) / gamma_rate;
}

double concurrence_t(const SuperpositionSpec& spec, const DephasingChannel& channel) {
  spec.require_nondegenerate();
  const double q = spec.q();
  if (channel.gamma_rate() > 0.0 && channel.t() >= sudden_death_time(spec, channel.gamma_rate())) {
    return 0.0;
  }
  const double p = spec.p();
  const double prefactor = 0.5 * one_plus_signed_pow(p, 2, -1.0) /
                           one_plus_signed_pow(p, spec.n(), spec.cos_m_pi());
  const double decay = 1.0 - channel.gamma();
  return std::max(0.0, prefactor * (decay * (1.0 + q) - one_plus_signed_pow(p, spec.n() - 2, -1.0)));
}

double discord_t(const SuperpositionSpec& spec, const DephasingChannel& channel,
                 const GridSpec& grid) {
  const TwoQubitState evolved = apply_dephasing(reduced_rho12(spec), channel);
  return discord_brute_force(evolved, grid).discord;
}

std::vector<double> default_time_grid(const SuperpositionSpec& spec, double gamma_rate,
                                      int steps, double multiple_of_t0) {
  if (steps < 2) throw DomainError("time grid needs at least 2 points");
  if (!(multiple_of_t0 > 0.0)) throw DomainError("time grid multiple must be positive");
  const double t0 = sudden_death_time(spec, gamma_rate);
  const double t_max =
      (std::isfinite(t0) && t0 > 0.0) ? multiple_of_t0 * t0 : 5.0 / gamma_rate;
  std::vector<double> ts(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) ts[i] = t_max * i / (steps - 1);
  return ts;
}

}  // namespace mcsd
