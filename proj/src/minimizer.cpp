#include <cmath>
#include <numbers>
#include <vector>

#include "mcsd/correlations.hpp"
#include "mcsd/error.hpp"
#include "mcsd/parallel.hpp"

namespace mcsd {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMinThetaPoints = 64;
constexpr int kMinPhiPoints = 128;
constexpr int kMaxSweeps = 200;
// Values closer than this are treated as a flat phi direction.
constexpr double kFlatTol = 1e-12;

struct Point {
  double value;
  double theta;
  double phi;
};

// Golden-section search for a minimum of f on [lo, hi].
template <class F>
Point golden_section(F&& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc <= fd ? Point{fc, c, 0.0} : Point{fd, d, 0.0};
}

double wrap_phi(double phi) {
  phi = std::fmod(phi, kTwoPi);
  return phi < 0.0 ? phi + kTwoPi : phi;
}

}  // namespace

double GridSpec::theta_step() const { return kPi / (n_theta - 1); }
double GridSpec::phi_step() const { return kTwoPi / (n_phi - 1); }

MinimizeResult minimize_conditional_entropy(const BlochMatrix& bloch, const GridSpec& grid,
                                            double refine_tol) {
  if (grid.n_theta < kMinThetaPoints || grid.n_phi < kMinPhiPoints) {
    throw DomainError("measurement grid must be at least 64x128");
  }
  if (!(refine_tol > 0.0)) throw DomainError("refine_tol must be positive");

  const auto objective = [&bloch](double theta, double phi) {
    return conditional_entropy(bloch, MeasurementBasis{theta, phi});
  };

  // Coarse grid: one row per theta. Row minima reduce in increasing theta and
  // phi order, keeping the first of equal values.
  const double dtheta = grid.theta_step();
  const double dphi = grid.phi_step();
  std::vector<Point> row_best(static_cast<std::size_t>(grid.n_theta));
  parallel_for(row_best.size(), [&](std::size_t i) {
    const double theta = static_cast<double>(i) * dtheta;
    Point best{objective(theta, 0.0), theta, 0.0};
    for (int j = 1; j < grid.n_phi; ++j) {
      const double phi = j * dphi;
      const double v = objective(theta, phi);
      if (v < best.value) best = {v, theta, phi};
    }
    row_best[i] = best;
  });
  Point best = row_best.front();
  for (const Point& p : row_best)
    if (p.value < best.value) best = p;

  MinimizeResult out;
  out.grid_value = best.value;
  out.grid_argmin = {best.theta, best.phi};

  // Coordinate descent inside one grid cell around the coarse minimum.
  Point cur = best;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    const Point start = cur;

    const double t_lo = std::max(0.0, cur.theta - dtheta);
    const double t_hi = std::min(kPi, cur.theta + dtheta);
    Point t = golden_section([&](double th) { return objective(th, cur.phi); }, t_lo, t_hi,
                             refine_tol);
    if (t.value < cur.value) cur = {t.value, t.theta, cur.phi};

    Point f = golden_section([&](double ph) { return objective(cur.theta, ph); },
                             cur.phi - dphi, cur.phi + dphi, refine_tol);
    if (f.value < cur.value) cur = {f.value, cur.theta, wrap_phi(f.theta)};

    const double moved = std::max(std::abs(cur.theta - start.theta),
                                  std::abs(wrap_phi(cur.phi - start.phi + kPi) - kPi));
    if (moved < refine_tol) break;
  }

  // Flat phi direction: report phi = 0.
  const double at_zero = objective(cur.theta, 0.0);
  if (at_zero <= cur.value + kFlatTol) cur = {std::min(at_zero, cur.value), cur.theta, 0.0};

  out.value = cur.value;
  out.argmin = {cur.theta, cur.phi};
  return out;
}

}  // namespace mcsd
