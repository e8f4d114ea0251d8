#include "mcsd/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mcsd/error.hpp"

namespace mcsd {

namespace {

bool is_positive_half_integer(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) return false;
  const double twice = 2.0 * x;
  return std::abs(twice - std::round(twice)) < 1e-12;
}

}  // namespace

AlgebraSpec AlgebraSpec::su2(double j) {
  AlgebraSpec a{AlgebraKind::Su2, j};
  a.validate();
  return a;
}

AlgebraSpec AlgebraSpec::su11(double k) {
  AlgebraSpec a{AlgebraKind::Su11, k};
  a.validate();
  return a;
}

void AlgebraSpec::validate() const {
  if (kind == AlgebraKind::Harmonic) return;
  if (!is_positive_half_integer(rep_param)) {
    throw DomainError(name() + ": representation parameter must be a positive half-integer, got " +
                      std::to_string(rep_param));
  }
}

std::size_t AlgebraSpec::max_level() const {
  if (kind == AlgebraKind::Su2) return static_cast<std::size_t>(std::lround(2.0 * rep_param));
  return std::numeric_limits<std::size_t>::max();
}

std::string AlgebraSpec::name() const {
  switch (kind) {
    case AlgebraKind::Harmonic: return "glauber";
    case AlgebraKind::Su2: return "su2";
    case AlgebraKind::Su11: return "su11";
  }
  return "unknown";
}

double structure_function(const AlgebraSpec& alg, std::size_t n) {
  alg.validate();
  const double x = static_cast<double>(n);
  switch (alg.kind) {
    case AlgebraKind::Harmonic:
      return x;
    case AlgebraKind::Su11:
      return x * (2.0 * alg.rep_param - 1.0 + x);
    case AlgebraKind::Su2:
      if (n > alg.max_level() + 1) {
        throw DomainError("su2 structure function: n = " + std::to_string(n) +
                          " exceeds 2j+1");
      }
      return x * (2.0 * alg.rep_param + 1.0 - x);
  }
  return 0.0;
}

namespace {

void check_z_domain(const AlgebraSpec& alg, double modulus) {
  if (!std::isfinite(modulus)) throw DomainError("overlap: z must be finite");
  if (alg.kind == AlgebraKind::Su11 && modulus >= 1.0) {
    throw DomainError("su11 coherent states require |z| < 1");
  }
  // Beyond the unit circle the su2 overlap changes sign (odd 2j) or turns back
  // towards 1 (even 2j); neither is a valid interpolation parameter.
  if (alg.kind == AlgebraKind::Su2 && modulus > 1.0) {
    throw DomainError("su2 overlap is restricted to |z| <= 1");
  }
}

}  // namespace

OverlapP overlap_closed(const AlgebraSpec& alg, std::complex<double> z) {
  alg.validate();
  const double r2 = std::norm(z);
  check_z_domain(alg, std::sqrt(r2));

  double value = 1.0;
  switch (alg.kind) {
    case AlgebraKind::Harmonic:
      value = std::exp(-2.0 * r2);
      break;
    case AlgebraKind::Su2:
    case AlgebraKind::Su11:
      value = std::pow((1.0 - r2) / (1.0 + r2), 2.0 * alg.rep_param);
      break;
  }
  return {value, alg, z};
}

SeriesSum overlap_series_sum(const AlgebraSpec& alg, std::complex<double> z, double tol) {
  alg.validate();
  if (!(tol > 0.0)) throw DomainError("overlap_series: tol must be positive");
  const double r2 = std::norm(z);
  check_z_domain(alg, std::sqrt(r2));
  if (r2 == 0.0) return {};

  const double log_r2 = std::log(r2);
  const double log_tol = std::log(tol);

  // Streaming log-sum-exp: both sums are held scaled by exp(-log_max) so that
  // large Glauber amplitudes do not overflow.
  double log_coeff = 0.0;  // log(F(n)! / (n!)^2)
  double log_max = 0.0;
  double norm_scaled = 1.0;
  double alt_scaled = 1.0;
  std::size_t n = 0;

  for (;;) {
    if (n + 1 > alg.max_level()) break;  // su2 ladder ends at 2j
    if (n + 1 >= kSeriesTermCap) {
      throw NumericError("overlap_series: no convergence within " +
                         std::to_string(kSeriesTermCap) + " terms");
    }
    const std::size_t next = n + 1;
    const double f = structure_function(alg, next);
    if (f <= 0.0) break;
    const double k = static_cast<double>(next);
    log_coeff += std::log(f) - 2.0 * std::log(k);
    const double log_term = log_coeff + k * log_r2;
    n = next;

    if (log_term > log_max) {
      const double scale = std::exp(log_max - log_term);
      norm_scaled *= scale;
      alt_scaled *= scale;
      log_max = log_term;
    }
    const double term = std::exp(log_term - log_max);
    norm_scaled += term;
    alt_scaled += (n % 2 == 0) ? term : -term;

    // Past the peak the term ratios decrease monotonically, so the remaining
    // tail is bounded by a geometric series with the current ratio.
    const double ratio_next =
        (alg.kind == AlgebraKind::Su2 && n + 1 > alg.max_level())
            ? 0.0
            : structure_function(alg, n + 1) * r2 / ((k + 1.0) * (k + 1.0));
    if (ratio_next < 1.0) {
      const double log_tail = log_term + std::log(ratio_next / (1.0 - ratio_next));
      if (ratio_next == 0.0 || log_tail - log_max - std::log(norm_scaled) < log_tol) break;
    }
  }

  SeriesSum out;
  out.overlap = std::clamp(alt_scaled / norm_scaled, 0.0, 1.0);
  out.inverse_norm_sq = norm_scaled * std::exp(log_max);
  out.last_index = n;
  return out;
}

OverlapP overlap_series(const AlgebraSpec& alg, std::complex<double> z, double tol) {
  return {overlap_series_sum(alg, z, tol).overlap, alg, z};
}

}  // namespace mcsd
