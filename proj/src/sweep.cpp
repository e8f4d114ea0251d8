#include "mcsd/sweep.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "mcsd/dynamics.hpp"
#include "mcsd/error.hpp"
#include "mcsd/parallel.hpp"

namespace mcsd {

std::vector<double> SampleRange::values() const {
  std::vector<double> v(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) v[i] = min + (max - min) * i / (steps - 1);
  v.back() = max;
  return v;
}

void SweepConfig::validate() const {
  if (p_grid.steps < 2) throw UsageError("--p-steps must be at least 2");
  if (!(p_grid.min >= 0.0 && p_grid.min <= p_grid.max && p_grid.max < 1.0)) {
    throw UsageError("p grid must satisfy 0 <= min <= max < 1");
  }
  for (int n : n_list)
    if (n < 2) throw UsageError("--n values must be >= 2");
  if (p && (algebra || z)) throw UsageError("give either --p or --algebra/--z, not both");
  if (algebra.has_value() != z.has_value() && mode != SweepMode::Overlap) {
    throw UsageError("--algebra and --z must be given together");
  }
  if (t_steps < 2) throw UsageError("--t-steps must be at least 2");
  if (gamma_rate && !(*gamma_rate > 0.0)) throw UsageError("--gamma-rate must be positive");
  if (grid.n_theta < 64 || grid.n_phi < 128) throw UsageError("--grid must be at least 64x128");
}

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

std::vector<Parity> parities(ParityChoice choice) {
  switch (choice) {
    case ParityChoice::Even: return {Parity::Even};
    case ParityChoice::Odd: return {Parity::Odd};
    case ParityChoice::Both: return {Parity::Even, Parity::Odd};
  }
  return {};
}

double resolve_p(const SweepConfig& cfg) {
  if (cfg.p) return *cfg.p;
  if (cfg.algebra && cfg.z) return overlap_closed(*cfg.algebra, *cfg.z).value;
  throw UsageError("an overlap source is required: --p or --algebra with --z");
}

namespace {

std::optional<Provenance> provenance_of(const SweepConfig& cfg) {
  if (cfg.algebra && cfg.z) return Provenance{*cfg.algebra, *cfg.z};
  return std::nullopt;
}

void write_metadata(std::ostream& out, const SweepConfig& cfg, const std::string& extra = {}) {
  out << "# command=" << cfg.command << " version=" << kVersion;
  if (!extra.empty()) out << ' ' << extra;
  out << '\n';
}

void check_stream(const std::ostream& out) {
  if (!out) throw IoError("failed writing output");
}

int single_n(const SweepConfig& cfg) {
  if (cfg.n_list.size() != 1) throw UsageError("exactly one --n value is required");
  return cfg.n_list.front();
}

Parity single_parity(const SweepConfig& cfg) {
  if (cfg.parity == ParityChoice::Both) throw UsageError("--parity even|odd is required");
  return cfg.parity == ParityChoice::Even ? Parity::Even : Parity::Odd;
}

void write_report(std::ostream& out, const CorrelationReport& r) {
  out << "mutual_information = " << format_number(r.mutual_info) << '\n'
      << "classical_correlation = " << format_number(r.classical_corr) << '\n'
      << "discord = " << format_number(r.discord) << '\n'
      << "concurrence = " << format_number(r.concurrence) << '\n'
      << "entanglement_of_formation = " << format_number(r.eof) << '\n'
      << "conditional_entropy_min = " << format_number(r.s_cond_min) << '\n'
      << "argmin_theta = " << format_number(r.argmin.theta) << '\n'
      << "argmin_phi = " << format_number(r.argmin.phi) << '\n';
}

}  // namespace

SweepConfig figure_config(int figure, SweepConfig cfg) {
  switch (figure) {
    case 1:
      cfg.mode = SweepMode::Figure1;
      if (cfg.n_list.empty()) cfg.n_list = {2};
      break;
    case 2:
      cfg.mode = SweepMode::Figure2;
      if (cfg.n_list.empty()) cfg.n_list = {4, 5, 25};
      cfg.parity = ParityChoice::Even;
      break;
    case 3:
      cfg.mode = SweepMode::Figure3;
      if (cfg.n_list.empty()) cfg.n_list = {4, 5, 25};
      cfg.parity = ParityChoice::Odd;
      break;
    default:
      throw UsageError("figure must be 1, 2 or 3");
  }
  return cfg;
}

void run_figure(int figure, const SweepConfig& base, std::ostream& out) {
  const SweepConfig cfg = figure_config(figure, base);
  cfg.validate();

  struct Task {
    int n;
    Parity parity;
    double p;
  };
  std::vector<Task> tasks;
  const std::vector<double> ps = cfg.p_grid.values();
  for (int n : cfg.n_list)
    for (Parity parity : parities(cfg.parity))
      for (double p : ps) tasks.push_back({n, parity, p});

  std::vector<double> discord(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t i) {
    discord[i] = discord_mixed_closed(SuperpositionSpec(tasks[i].p, tasks[i].parity, tasks[i].n))
                     .discord;
  });

  write_metadata(out, cfg, "figure=" + std::to_string(figure));
  out << "p,n,parity,discord\n";
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    out << format_number(tasks[i].p) << ',' << tasks[i].n << ',' << to_string(tasks[i].parity)
        << ',' << format_number(discord[i]) << '\n';
  }
  check_stream(out);
}

void run_pure_sweep(const SweepConfig& base, std::ostream& out) {
  SweepConfig cfg = base;
  if (cfg.n_list.empty()) cfg.n_list = {4};
  cfg.validate();

  struct Task {
    int n;
    int k;
    Parity parity;
    double p;
  };
  std::vector<Task> tasks;
  const std::vector<double> ps = cfg.p_grid.values();
  for (int n : cfg.n_list) {
    std::vector<int> ks;
    if (cfg.k) {
      if (*cfg.k < 1 || *cfg.k > n - 1) throw UsageError("--k must lie in [1, n-1]");
      ks = {*cfg.k};
    } else {
      for (int k = 1; k < n; ++k) ks.push_back(k);
    }
    for (int k : ks)
      for (Parity parity : parities(cfg.parity))
        for (double p : ps) tasks.push_back({n, k, parity, p});
  }

  std::vector<CorrelationReport> reports(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t i) {
    const auto& t = tasks[i];
    reports[i] = discord_pure(pure_bipartition(SuperpositionSpec(t.p, t.parity, t.n), t.k));
  });

  write_metadata(out, cfg, "mode=sweep-pure");
  out << "p,n,k,parity,concurrence,discord\n";
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const auto& t = tasks[i];
    out << format_number(t.p) << ',' << t.n << ',' << t.k << ',' << to_string(t.parity) << ','
        << format_number(reports[i].concurrence) << ',' << format_number(reports[i].discord)
        << '\n';
  }
  check_stream(out);
}

void run_dynamics(const SweepConfig& cfg, std::ostream& out) {
  cfg.validate();
  if (!cfg.gamma_rate) throw UsageError("dynamics requires --gamma-rate");
  const double rate = *cfg.gamma_rate;
  const SuperpositionSpec spec(resolve_p(cfg), single_parity(cfg), single_n(cfg),
                               provenance_of(cfg));
  const TwoQubitState rho0 = reduced_rho12(spec);
  const double t0 = sudden_death_time(spec, rate);
  const std::vector<double> ts = default_time_grid(spec, rate, cfg.t_steps, cfg.t_max_multiple);

  struct Row {
    double gamma, c_closed, c_wootters, discord;
  };
  std::vector<Row> rows(ts.size());
  // Parallelism lives in the per-point minimizer.
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const DephasingChannel channel(rate, ts[i]);
    const TwoQubitState evolved = apply_dephasing(rho0, channel);
    rows[i] = {channel.gamma(), concurrence_t(spec, channel), concurrence_x(evolved),
               discord_brute_force(evolved, cfg.grid).discord};
  }

  write_metadata(out, cfg,
                 "mode=dynamics p=" + format_number(spec.p()) + " n=" + std::to_string(spec.n()) +
                     " parity=" + to_string(spec.parity()) + " gamma_rate=" +
                     format_number(rate) + " t0=" + format_number(t0));
  out << "t,gamma,concurrence_closed,concurrence_wootters,discord_brute,is_past_t0\n";
  for (std::size_t i = 0; i < ts.size(); ++i) {
    out << format_number(ts[i]) << ',' << format_number(rows[i].gamma) << ','
        << format_number(rows[i].c_closed) << ',' << format_number(rows[i].c_wootters) << ','
        << format_number(rows[i].discord) << ',' << (ts[i] >= t0 ? 1 : 0) << '\n';
  }
  check_stream(out);
}

void run_point(const SweepConfig& cfg, std::ostream& out) {
  cfg.validate();
  const int n = single_n(cfg);
  const std::string grid_label =
      std::to_string(cfg.grid.n_theta) + "x" + std::to_string(cfg.grid.n_phi);

  if (cfg.werner_limit) {
    const TwoQubitState state = werner_limit_state(n);
    const CorrelationReport brute = discord_brute_force(state, cfg.grid);
    CorrelationReport closed;
    closed.discord = werner_discord(n);
    closed.mutual_info = mutual_information(state);
    closed.classical_corr = closed.mutual_info - closed.discord;
    closed.concurrence = 2.0 / n;
    closed.eof = entanglement_of_formation(closed.concurrence);
    closed.s_cond_min = closed.discord - von_neumann_entropy(state.marginal_first()) +
                        von_neumann_entropy(state);
    closed.argmin = {std::numbers::pi / 2.0, 0.0};

    write_metadata(out, cfg, "mode=point werner_limit=1");
    out << "p = 1\nn = " << n << "\nparity = odd\n\n[closed form, Werner limit]\n";
    write_report(out, closed);
    out << "\n[brute force " << grid_label << "]\n";
    write_report(out, brute);
    out << "\nresidual_discord = " << format_number(std::abs(closed.discord - brute.discord))
        << '\n';
    check_stream(out);
    return;
  }

  const Parity parity = single_parity(cfg);
  const double p = resolve_p(cfg);
  const SuperpositionSpec spec(p, parity, n, provenance_of(cfg));
  if (spec.is_degenerate()) {
    throw LimitRequiredError("p = 1 with odd parity is the Werner limit; rerun with --werner-limit");
  }
  const CorrelationReport closed = discord_mixed_closed(spec);
  const CorrelationReport brute = discord_brute_force(reduced_rho12(spec), cfg.grid);

  write_metadata(out, cfg, "mode=point");
  out << "p = " << format_number(p) << '\n';
  if (cfg.algebra && cfg.z) {
    out << "algebra = " << cfg.algebra->name();
    if (cfg.algebra->kind != AlgebraKind::Harmonic) {
      out << " rep_param=" << format_number(cfg.algebra->rep_param);
    }
    out << "\nz = " << format_number(cfg.z->real()) << (cfg.z->imag() < 0 ? "-" : "+")
        << format_number(std::abs(cfg.z->imag())) << "i\n";
  }
  out << "n = " << n << "\nparity = " << to_string(parity) << "\n\n[closed form]\n";
  write_report(out, closed);
  out << "\n[brute force " << grid_label << "]\n";
  write_report(out, brute);
  out << "\nresidual_discord = " << format_number(std::abs(closed.discord - brute.discord))
      << '\n';

  if (cfg.k) {
    const PureBipartition bp = pure_bipartition(spec, *cfg.k);
    out << "\n[pure bipartition k=" << *cfg.k << "]\n";
    out << "c00 = " << format_number(bp.c00) << "\nc01 = " << format_number(bp.c01)
        << "\nc10 = " << format_number(bp.c10) << "\nc11 = " << format_number(bp.c11) << '\n';
    write_report(out, discord_pure(bp));
  }
  check_stream(out);
}

void run_overlap(const SweepConfig& cfg, std::ostream& out) {
  const AlgebraSpec alg = cfg.algebra.value_or(AlgebraSpec::harmonic());
  alg.validate();

  std::vector<std::complex<double>> zs;
  if (cfg.z) {
    zs.push_back(*cfg.z);
  } else {
    if (cfg.p_grid.steps < 2) throw UsageError("--p-steps must be at least 2");
    const double z_max = alg.kind == AlgebraKind::Harmonic ? 3.0
                         : alg.kind == AlgebraKind::Su2   ? 1.0
                                                          : 0.99;
    for (double x : SampleRange{0.0, z_max, cfg.p_grid.steps}.values()) zs.emplace_back(x, 0.0);
  }

  write_metadata(out, cfg, "mode=overlap");
  out << "algebra,rep_param,z_re,z_im,p_closed,p_series,abs_diff\n";
  for (const auto& z : zs) {
    const double closed = overlap_closed(alg, z).value;
    const double series = overlap_series(alg, z).value;
    out << alg.name() << ',' << format_number(alg.rep_param) << ',' << format_number(z.real())
        << ',' << format_number(z.imag()) << ',' << format_number(closed) << ','
        << format_number(series) << ',' << format_number(std::abs(closed - series)) << '\n';
  }
  check_stream(out);
}

}  // namespace mcsd
