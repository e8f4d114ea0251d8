// mcsd: quantum correlations of multipartite coherent-state superpositions.
//
//   mcsd figure 2 --out fig2.csv
//   mcsd point --algebra glauber --z 1.0 --n 4 --parity even
//   mcsd dynamics --p 0.6 --n 5 --parity even --gamma-rate 1
//
// Exit codes: 0 success, 1 usage error, 2 I/O error, 3 numeric/domain error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mcsd/error.hpp"
#include "mcsd/sweep.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitNumeric = 3;

std::complex<double> parse_complex(const std::string& text) {
  // "re" or "re,im"
  std::istringstream in(text);
  in.imbue(std::locale::classic());
  double re = 0.0, im = 0.0;
  char sep = 0;
  if (!(in >> re)) throw mcsd::UsageError("cannot parse --z '" + text + "'");
  if (in >> sep) {
    if (sep != ',' || !(in >> im)) throw mcsd::UsageError("--z expects RE or RE,IM");
  }
  return {re, im};
}

mcsd::GridSpec parse_grid(const std::string& text) {
  const auto x = text.find('x');
  if (x == std::string::npos) throw mcsd::UsageError("--grid expects NTHETAxNPHI");
  try {
    return {std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1))};
  } catch (const std::exception&) {
    throw mcsd::UsageError("--grid expects NTHETAxNPHI");
  }
}

struct Options {
  std::optional<double> p;
  std::string algebra;
  std::optional<std::string> z;
  std::optional<double> rep_param;
  std::vector<int> n;
  std::string parity;
  std::optional<int> k;
  std::optional<double> gamma_rate;
  int t_steps = 200;
  int p_steps = 500;
  std::string out;
  std::string grid = "181x361";
  bool werner_limit = false;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--p", o.p, "Overlap p = <z|-z>");
  cmd->add_option("--algebra", o.algebra, "Coherent-state family")
      ->check(CLI::IsMember({"glauber", "su2", "su11"}));
  cmd->add_option("--z", o.z, "Amplitude z as RE or RE,IM");
  cmd->add_option("--rep-param", o.rep_param, "Spin j (su2) or Bargmann index k (su11)");
  cmd->add_option("--n", o.n, "Particle count(s)")->delimiter(',');
  cmd->add_option("--parity", o.parity, "Parity of m")->check(CLI::IsMember({"even", "odd"}));
  cmd->add_option("--k", o.k, "Size of the first block of the pure bipartition");
  cmd->add_option("--gamma-rate", o.gamma_rate, "Dephasing rate");
  cmd->add_option("--t-steps", o.t_steps, "Number of time points");
  cmd->add_option("--p-steps", o.p_steps, "Number of p samples on [0, 0.999]");
  cmd->add_option("--out", o.out, "Output path (default: standard output)");
  cmd->add_option("--grid", o.grid, "Brute-force measurement grid NTHETAxNPHI");
  cmd->add_flag("--werner-limit", o.werner_limit, "Use the p -> 1 antisymmetric (W) limit");
}

mcsd::SweepConfig to_config(const Options& o, const std::string& command) {
  mcsd::SweepConfig cfg;
  cfg.command = command;
  cfg.p = o.p;
  cfg.n_list = o.n;
  cfg.k = o.k;
  cfg.gamma_rate = o.gamma_rate;
  cfg.t_steps = o.t_steps;
  cfg.p_grid.steps = o.p_steps;
  cfg.werner_limit = o.werner_limit;
  cfg.grid = parse_grid(o.grid);
  if (o.parity == "even") cfg.parity = mcsd::ParityChoice::Even;
  if (o.parity == "odd") cfg.parity = mcsd::ParityChoice::Odd;
  if (!o.algebra.empty()) {
    if (o.algebra == "glauber") {
      cfg.algebra = mcsd::AlgebraSpec::harmonic();
    } else {
      if (!o.rep_param) throw mcsd::UsageError("--algebra " + o.algebra + " needs --rep-param");
      cfg.algebra = o.algebra == "su2" ? mcsd::AlgebraSpec::su2(*o.rep_param)
                                       : mcsd::AlgebraSpec::su11(*o.rep_param);
    }
  }
  if (o.z) cfg.z = parse_complex(*o.z);
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum discord and entanglement of multipartite coherent-state superpositions"};
  app.require_subcommand(1);

  Options opts;
  int figure = 0;
  auto* fig = app.add_subcommand("figure", "Discord versus overlap for figures 1-3 (CSV)");
  fig->add_option("number", figure, "Figure number")->required()->check(CLI::Range(1, 3));
  auto* point = app.add_subcommand("point", "Correlation report for a single state");
  auto* pure = app.add_subcommand("sweep-pure", "Pure k|(n-k) bipartition sweep (CSV)");
  auto* dyn = app.add_subcommand("dynamics", "Dephasing trajectory (CSV)");
  auto* ovl = app.add_subcommand("overlap", "Closed versus series overlap (CSV)");
  for (auto* cmd : {fig, point, pure, dyn, ovl}) add_common(cmd, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::string command = "mcsd";
  for (int i = 1; i < argc; ++i) command += std::string(" ") + argv[i];

  try {
    const mcsd::SweepConfig cfg = to_config(opts, command);

    std::ofstream file;
    if (!opts.out.empty()) {
      file.open(opts.out);
      if (!file) throw mcsd::IoError("cannot open output file '" + opts.out + "'");
    }
    std::ostream& out = opts.out.empty() ? std::cout : file;

    if (fig->parsed()) {
      mcsd::run_figure(figure, cfg, out);
    } else if (point->parsed()) {
      mcsd::run_point(cfg, out);
    } else if (pure->parsed()) {
      mcsd::run_pure_sweep(cfg, out);
    } else if (dyn->parsed()) {
      mcsd::run_dynamics(cfg, out);
    } else if (ovl->parsed()) {
      mcsd::run_overlap(cfg, out);
    }
    out.flush();
    if (!out) throw mcsd::IoError("failed writing output");
  } catch (const mcsd::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const mcsd::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const mcsd::LimitRequiredError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const mcsd::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const mcsd::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return 0;
}
