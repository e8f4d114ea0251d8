#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "mcsd/coherent.hpp"
#include "mcsd/error.hpp"

using namespace mcsd;
using std::complex;

TEST_CASE("structure functions of the three presets") {
  CHECK(structure_function(AlgebraSpec::harmonic(), 3) == 3.0);
  CHECK(structure_function(AlgebraSpec::su2(0.5), 1) == 1.0);
  CHECK(structure_function(AlgebraSpec::su11(1.0), 2) == 6.0);

  // The su2 ladder closes: F(2j+1) = 0.
  CHECK(structure_function(AlgebraSpec::su2(1.5), 4) == 0.0);
  CHECK_THROWS_AS(structure_function(AlgebraSpec::su2(1.5), 5), DomainError);

  for (std::size_t n = 0; n <= 3; ++n) CHECK(structure_function(AlgebraSpec::su2(1.5), n) >= 0.0);
}

TEST_CASE("representation parameter must be a positive half-integer") {
  CHECK_THROWS_AS(AlgebraSpec::su2(0.3), DomainError);
  CHECK_THROWS_AS(AlgebraSpec::su11(0.0), DomainError);
  CHECK_THROWS_AS(AlgebraSpec::su11(-1.0), DomainError);
  CHECK_NOTHROW(AlgebraSpec::su2(2.5));
  CHECK(AlgebraSpec::su2(2.5).max_level() == 5);
}

TEST_CASE("closed overlap kernels") {
  CHECK(overlap_closed(AlgebraSpec::harmonic(), 0.0).value == 1.0);
  CHECK(overlap_closed(AlgebraSpec::harmonic(), 1.0).value ==
        doctest::Approx(0.1353352832366127).epsilon(1e-15));
  CHECK(overlap_closed(AlgebraSpec::su2(0.5), 1.0).value == doctest::Approx(0.0));
  CHECK(overlap_closed(AlgebraSpec::su11(0.5), 0.3).value ==
        doctest::Approx(0.8348623853211009).epsilon(1e-15));

  CHECK_THROWS_AS(overlap_closed(AlgebraSpec::su11(1.0), 1.0), DomainError);
  CHECK_THROWS_AS(overlap_closed(AlgebraSpec::su11(1.0), complex<double>(0.8, 0.7)), DomainError);
  CHECK_THROWS_AS(overlap_closed(AlgebraSpec::su2(1.0), 1.5), DomainError);
}

TEST_CASE("series summation reproduces the closed kernels") {
  CHECK(overlap_series(AlgebraSpec::harmonic(), 0.0).value == 1.0);
  CHECK(std::abs(overlap_series(AlgebraSpec::su2(1.0), 0.5).value -
                 overlap_closed(AlgebraSpec::su2(1.0), 0.5).value) < 1e-10);
  CHECK(overlap_series(AlgebraSpec::su11(0.5), 0.3).value ==
        doctest::Approx(0.8348623853211009).epsilon(1e-12));

  const AlgebraSpec algebras[] = {AlgebraSpec::harmonic(), AlgebraSpec::su2(0.5),
                                  AlgebraSpec::su2(3.0),   AlgebraSpec::su11(0.5),
                                  AlgebraSpec::su11(2.5)};
  for (const auto& alg : algebras) {
    const double z_max = alg.kind == AlgebraKind::Harmonic ? 4.0
                         : alg.kind == AlgebraKind::Su2   ? 1.0
                                                          : 0.95;
    double worst = 0.0;
    for (int i = 0; i < 120; ++i) {
      const double r = z_max * i / 119.0;
      const complex<double> z = std::polar(r, 0.37 * i);
      worst = std::max(worst, std::abs(overlap_series(alg, z).value - overlap_closed(alg, z).value));
    }
    INFO(alg.name(), " j/k=", alg.rep_param);
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("series stays finite for large Glauber amplitudes") {
  const auto s = overlap_series_sum(AlgebraSpec::harmonic(), 30.0);
  CHECK(std::isfinite(s.overlap));
  CHECK(s.overlap == doctest::Approx(0.0));
  // exp(900) is beyond double range; only the overlap is guaranteed finite.
  CHECK(std::isinf(s.inverse_norm_sq));
  CHECK(std::isfinite(overlap_series_sum(AlgebraSpec::harmonic(), 20.0).inverse_norm_sq));
}

TEST_CASE("series normalization matches the closed normalization") {
  // N(|z|)^-2 = exp(|z|^2), (1+|z|^2)^{2j}, (1-|z|^2)^{-2k}
  CHECK(overlap_series_sum(AlgebraSpec::harmonic(), 1.2).inverse_norm_sq ==
        doctest::Approx(std::exp(1.44)).epsilon(1e-13));
  CHECK(overlap_series_sum(AlgebraSpec::su2(2.0), 0.7).inverse_norm_sq ==
        doctest::Approx(std::pow(1.49, 4.0)).epsilon(1e-13));
  CHECK(overlap_series_sum(AlgebraSpec::su11(1.5), 0.6).inverse_norm_sq ==
        doctest::Approx(std::pow(0.64, -3.0)).epsilon(1e-12));
}

TEST_CASE("su2 series terminates at n = 2j") {
  for (double j : {0.5, 1.0, 1.5, 2.0, 4.5}) {
    const auto s = overlap_series_sum(AlgebraSpec::su2(j), 0.8);
    CHECK(s.last_index == static_cast<std::size_t>(2 * j));
  }
}

TEST_CASE("overlap depends only on |z| and decreases with it") {
  const AlgebraSpec algebras[] = {AlgebraSpec::harmonic(), AlgebraSpec::su2(1.5),
                                  AlgebraSpec::su11(1.0)};
  for (const auto& alg : algebras) {
    const double z_max = alg.kind == AlgebraKind::Su11 ? 0.99 : 1.0;
    double prev = 1.0;
    for (int i = 1; i <= 200; ++i) {
      const double r = z_max * i / 200.0;
      const double p = overlap_closed(alg, r).value;
      CHECK(p < prev);
      CHECK(p >= 0.0);
      prev = p;
      for (double phase : {0.5, 2.0, std::numbers::pi}) {
        CHECK(overlap_closed(alg, std::polar(r, phase)).value == doctest::Approx(p).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("series rejects a non-positive tolerance") {
  CHECK_THROWS_AS(overlap_series(AlgebraSpec::harmonic(), 1.0, 0.0), DomainError);
}
