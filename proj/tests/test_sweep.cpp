#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "mcsd/error.hpp"
#include "mcsd/sweep.hpp"

using namespace mcsd;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) out.push_back(cell);
  return out;
}

std::string figure_text(int figure, SweepConfig cfg) {
  std::ostringstream out;
  run_figure(figure, cfg, out);
  return out.str();
}

// Value following "key = " in the section that starts with header.
double report_value(const std::string& text, const std::string& header, const std::string& key) {
  const auto section = text.find(header);
  REQUIRE(section != std::string::npos);
  const auto pos = text.find(key + " = ", section);
  REQUIRE(pos != std::string::npos);
  return std::stod(text.substr(pos + key.size() + 3));
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(1e-20) == "1e-20");
}

TEST_CASE("sample range") {
  const auto v = SampleRange{}.values();
  REQUIRE(v.size() == 500);
  CHECK(v.front() == 0.0);
  CHECK(v.back() == 0.999);
  for (std::size_t i = 1; i < v.size(); ++i) CHECK(v[i] > v[i - 1]);
}

TEST_CASE("figure defaults") {
  const auto f1 = figure_config(1, {});
  CHECK(f1.n_list == std::vector<int>{2});
  CHECK(f1.parity == ParityChoice::Both);
  const auto f2 = figure_config(2, {});
  CHECK(f2.n_list == std::vector<int>{4, 5, 25});
  CHECK(f2.parity == ParityChoice::Even);
  CHECK(figure_config(3, {}).parity == ParityChoice::Odd);
  SweepConfig custom;
  custom.n_list = {7};
  CHECK(figure_config(2, custom).n_list == std::vector<int>{7});
  CHECK_THROWS_AS(figure_config(4, {}), UsageError);
}

TEST_CASE("figure 1 rows") {
  SweepConfig cfg;
  cfg.p_grid.steps = 50;
  const auto lines = lines_of(figure_text(1, cfg));
  REQUIRE(lines.size() == 2 + 100);
  CHECK(lines[0].rfind("# command=mcsd version=1.0.0 figure=1", 0) == 0);
  CHECK(lines[1] == "p,n,parity,discord");
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const auto cells = split(lines[i]);
    REQUIRE(cells.size() == 4);
    CHECK(cells[1] == "2");
    CHECK(cells[2] == (i < 52 ? "even" : "odd"));
    const double d = std::stod(cells[3]);
    if (cells[2] == "odd") CHECK(d == doctest::Approx(1.0).epsilon(1e-11));
    CHECK(d >= 0.0);
    CHECK(d <= 1.0 + 1e-12);
  }
  // Even n = 2 discord decreases with p.
  for (std::size_t i = 3; i < 52; ++i) CHECK(std::stod(split(lines[i])[3]) < std::stod(split(lines[i - 1])[3]));
}

TEST_CASE("figures 2 and 3 bounds and ordering") {
  for (int figure : {2, 3}) {
    SweepConfig cfg;
    cfg.p_grid.steps = 40;
    const auto lines = lines_of(figure_text(figure, cfg));
    REQUIRE(lines.size() == 2 + 120);
    for (std::size_t i = 2; i < lines.size(); ++i) {
      const auto cells = split(lines[i]);
      const int n = std::stoi(cells[1]);
      CHECK(n == (i < 42 ? 4 : i < 82 ? 5 : 25));
      CHECK(cells[2] == (figure == 2 ? "even" : "odd"));
      const double d = std::stod(cells[3]);
      CHECK(d >= 0.0);
      CHECK(d <= 2.0);
    }
  }
}

TEST_CASE("figure output is deterministic") {
  SweepConfig cfg;
  cfg.p_grid.steps = 200;
  const std::string first = figure_text(2, cfg);
  for (int run = 0; run < 3; ++run) CHECK(figure_text(2, cfg) == first);
}

TEST_CASE("pure sweep") {
  SweepConfig cfg;
  cfg.p_grid.steps = 10;
  cfg.parity = ParityChoice::Even;
  std::ostringstream out;
  run_pure_sweep(cfg, out);
  const auto lines = lines_of(out.str());
  REQUIRE(lines.size() == 2 + 3 * 10);
  CHECK(lines[1] == "p,n,k,parity,concurrence,discord");
  CHECK(split(lines[2])[2] == "1");
  CHECK(split(lines.back())[2] == "3");
  // p = 0 is a GHZ state: one ebit across every cut.
  CHECK(std::stod(split(lines[2])[4]) == doctest::Approx(1.0));
  CHECK(std::stod(split(lines[2])[5]) == doctest::Approx(1.0));

  cfg.k = 4;
  std::ostringstream bad;
  CHECK_THROWS_AS(run_pure_sweep(cfg, bad), UsageError);
}

TEST_CASE("point report from an algebra") {
  SweepConfig cfg;
  cfg.algebra = AlgebraSpec::harmonic();
  cfg.z = std::complex<double>(1.0, 0.0);
  cfg.n_list = {4};
  cfg.parity = ParityChoice::Even;
  cfg.k = 2;
  cfg.grid = {91, 181};
  std::ostringstream out;
  run_point(cfg, out);
  const std::string text = out.str();
  CHECK(text.find("p = 0.135335283237\n") != std::string::npos);
  CHECK(text.find("algebra = glauber\n") != std::string::npos);
  CHECK(text.find("[brute force 91x181]") != std::string::npos);
  CHECK(text.find("[pure bipartition k=2]") != std::string::npos);
  const double closed = report_value(text, "[closed form]", "discord");
  const double brute = report_value(text, "[brute force", "discord");
  CHECK(std::abs(closed - brute) < 1e-9);
  CHECK(report_value(text, "[closed form]", "argmin_theta") == doctest::Approx(1.57079632679));
}

TEST_CASE("point report in the Werner limit") {
  SweepConfig cfg;
  cfg.n_list = {4};
  cfg.werner_limit = true;
  std::ostringstream out;
  run_point(cfg, out);
  const std::string text = out.str();
  CHECK(report_value(text, "[closed form", "discord") == doctest::Approx(werner_discord(4)).epsilon(1e-11));
  CHECK(report_value(text, "[closed form", "concurrence") == doctest::Approx(0.5));
  CHECK(report_value(text, "residual_discord", "residual_discord") < 1e-9);
}

TEST_CASE("degenerate point needs the Werner limit") {
  SweepConfig cfg;
  cfg.p = 1.0;
  cfg.n_list = {4};
  cfg.parity = ParityChoice::Odd;
  std::ostringstream out;
  CHECK_THROWS_AS(run_point(cfg, out), LimitRequiredError);
}

TEST_CASE("dynamics rows") {
  SweepConfig cfg;
  cfg.p = 0.6;
  cfg.n_list = {5};
  cfg.parity = ParityChoice::Even;
  cfg.gamma_rate = 1.0;
  cfg.t_steps = 13;
  cfg.grid = {64, 128};
  std::ostringstream out;
  run_dynamics(cfg, out);
  const auto lines = lines_of(out.str());
  REQUIRE(lines.size() == 2 + 13);
  CHECK(lines[0].find(" t0=") != std::string::npos);
  CHECK(lines[1] == "t,gamma,concurrence_closed,concurrence_wootters,discord_brute,is_past_t0");
  bool seen_past = false;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const auto cells = split(lines[i]);
    REQUIRE(cells.size() == 6);
    const double closed = std::stod(cells[2]);
    CHECK(std::abs(closed - std::stod(cells[3])) < 1e-10);
    CHECK(std::stod(cells[4]) > 0.0);
    if (cells[5] == "1") {
      seen_past = true;
      CHECK(closed == 0.0);
    } else {
      CHECK(!seen_past);
    }
  }
  CHECK(seen_past);
}

TEST_CASE("configuration errors") {
  std::ostringstream out;
  SweepConfig both;
  both.p = 0.5;
  both.algebra = AlgebraSpec::harmonic();
  both.z = 1.0;
  both.n_list = {4};
  both.parity = ParityChoice::Even;
  CHECK_THROWS_AS(run_point(both, out), UsageError);

  SweepConfig no_source;
  no_source.n_list = {4};
  no_source.parity = ParityChoice::Even;
  CHECK_THROWS_AS(run_point(no_source, out), UsageError);

  SweepConfig no_parity;
  no_parity.p = 0.5;
  no_parity.n_list = {4};
  CHECK_THROWS_AS(run_point(no_parity, out), UsageError);

  SweepConfig small_n;
  small_n.n_list = {1};
  CHECK_THROWS_AS(run_figure(2, small_n, out), UsageError);

  SweepConfig no_rate;
  no_rate.p = 0.5;
  no_rate.n_list = {4};
  no_rate.parity = ParityChoice::Even;
  CHECK_THROWS_AS(run_dynamics(no_rate, out), UsageError);

  SweepConfig coarse;
  coarse.grid = {10, 10};
  CHECK_THROWS_AS(coarse.validate(), UsageError);
}

TEST_CASE("overlap table") {
  SweepConfig cfg;
  cfg.algebra = AlgebraSpec::su11(1.5);
  cfg.p_grid.steps = 20;
  std::ostringstream out;
  run_overlap(cfg, out);
  const auto lines = lines_of(out.str());
  REQUIRE(lines.size() == 2 + 20);
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const auto cells = split(lines[i]);
    CHECK(cells[0] == "su11");
    CHECK(std::stod(cells[6]) < 1e-10);
  }
}
