#pragma once

// Structure functions of the generalized Weyl-Heisenberg algebra and the
// overlap p = <z|-z> between opposite-phase coherent states.
//
// Three presets are supported:
//   Harmonic  F(n) = n                 (Glauber states, z anywhere)
//   Su2       F(n) = n (2j + 1 - n)    (spin-j states, |z| <= 1 here)
//   Su11      F(n) = n (2k - 1 + n)    (Bargmann index k, |z| < 1)
//
// For all three kernels p depends on |z| only.

#include <complex>
#include <cstddef>
#include <string>

namespace mcsd {

enum class AlgebraKind { Harmonic, Su2, Su11 };

struct AlgebraSpec {
  AlgebraKind kind = AlgebraKind::Harmonic;
  // Spin j for Su2, Bargmann index k for Su11; ignored for Harmonic.
  double rep_param = 0.0;

  static AlgebraSpec harmonic() { return {AlgebraKind::Harmonic, 0.0}; }
  static AlgebraSpec su2(double j);
  static AlgebraSpec su11(double k);

  // Throws DomainError unless rep_param is a positive half-integer
  // (Su2/Su11).
  void validate() const;

  // Largest Fock index for Su2 (2j); unbounded algebras return SIZE_MAX.
  std::size_t max_level() const;

  std::string name() const;
};

struct OverlapP {
  double value = 1.0;
  AlgebraSpec algebra;
  std::complex<double> z;
};

// Raw output of the coherent-state series.
struct SeriesSum {
  double overlap = 1.0;           // <z|-z>
  double inverse_norm_sq = 1.0;   // N(|z|)^-2, +inf once it overflows
  std::size_t last_index = 0;     // highest n included in the sums
};

double structure_function(const AlgebraSpec& alg, std::size_t n);

// Closed kernels evaluated at z1 = z, z2 = -z.
OverlapP overlap_closed(const AlgebraSpec& alg, std::complex<double> z);

inline constexpr double kDefaultSeriesTol = 1e-14;
inline constexpr std::size_t kSeriesTermCap = 1'000'000;

SeriesSum overlap_series_sum(const AlgebraSpec& alg, std::complex<double> z,
                             double tol = kDefaultSeriesTol);

// Sums N(|z|)^2 sum_n F(n)!/(n!)^2 (-|z|^2)^n with generalized factorials
// accumulated in log space.
OverlapP overlap_series(const AlgebraSpec& alg, std::complex<double> z,
                        double tol = kDefaultSeriesTol);

}  // namespace mcsd
