#pragma once

// Deterministic CSV and text front end: figure data, pure-bipartition sweeps,
// dephasing trajectories, single-point reports and overlap tables.
//
// CSV layout: a '#'-prefixed metadata line, a header line, then rows. Numbers
// use 12 significant digits and '.' as decimal separator regardless of locale.

#include <complex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcsd/coherent.hpp"
#include "mcsd/correlations.hpp"
#include "mcsd/states.hpp"

namespace mcsd {

inline constexpr const char* kVersion = "1.0.0";

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid combination of options; maps to the usage exit code.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

enum class SweepMode { Figure1, Figure2, Figure3, PureSweep, Dynamics, Point, Overlap };
enum class ParityChoice { Even, Odd, Both };

struct SampleRange {
  double min = 0.0;
  double max = 0.999;
  int steps = 500;

  std::vector<double> values() const;
};

struct SweepConfig {
  SweepMode mode = SweepMode::Point;
  SampleRange p_grid;
  std::vector<int> n_list;
  ParityChoice parity = ParityChoice::Both;
  std::optional<int> k;
  std::optional<double> gamma_rate;
  double t_max_multiple = 3.0;
  int t_steps = 200;
  // Overlap source: either p directly or an algebra with amplitude z.
  std::optional<double> p;
  std::optional<AlgebraSpec> algebra;
  std::optional<std::complex<double>> z;
  bool werner_limit = false;
  GridSpec grid;
  // Echoed in the metadata line.
  std::string command = "mcsd";

  // Throws UsageError on an invalid configuration.
  void validate() const;
};

std::string format_number(double value);
std::vector<Parity> parities(ParityChoice choice);

// Resolved overlap: p directly, or overlap_closed(algebra, z).
double resolve_p(const SweepConfig& cfg);

// Defaults for figure 1 (n = 2, both parities), 2 (even, n = 4, 5, 25) and
// 3 (odd, n = 4, 5, 25). Options already set in cfg take precedence.
SweepConfig figure_config(int figure, SweepConfig cfg);

// Rows p,n,parity,discord from the closed form; n-major, then parity, then p.
void run_figure(int figure, const SweepConfig& cfg, std::ostream& out);
// Rows p,n,k,parity,concurrence,discord for the pure k|(n-k) split.
void run_pure_sweep(const SweepConfig& cfg, std::ostream& out);
// Rows t,gamma,concurrence_closed,concurrence_wootters,discord_brute,is_past_t0.
void run_dynamics(const SweepConfig& cfg, std::ostream& out);
// Human-readable report for a single state.
void run_point(const SweepConfig& cfg, std::ostream& out);
// Rows algebra,rep_param,z_re,z_im,p_closed,p_series,abs_diff.
void run_overlap(const SweepConfig& cfg, std::ostream& out);

}  // namespace mcsd
