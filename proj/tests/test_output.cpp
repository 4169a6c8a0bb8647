#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "lvc/csv.hpp"
#include "lvc/errors.hpp"
#include "lvc/pde.hpp"
#include "lvc/svg.hpp"

using namespace lvc;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_SUITE("output") {

TEST_CASE("full-precision formatting round-trips doubles") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double x = unit(rng) * std::pow(10.0, static_cast<int>(rng() % 12) - 6);
    CHECK(std::stod(format_full(x)) == x);
  }
}

TEST_CASE("trajectory and control CSVs are deterministic") {
  const Parameters p = validate_parameters(0.1, 0.1, 1, 0.8, 0.7, 1);
  Grid g(p.L, 12);
  SimulateOptions opt;
  opt.t_end = 0.5;
  opt.dt = 0.01;
  opt.snapshot_stride = 10;
  Trajectory traj = simulate(FieldPair::uniform(g, 0.2, 0.5),
                             BoundaryControl::constant({0.3, 0.3, 0.2, 0.2}), p, g, opt);

  write_trajectory_csv("traj_a.csv", traj, g);
  write_trajectory_csv("traj_b.csv", traj, g);
  const std::string a = slurp("traj_a.csv");
  CHECK(a == slurp("traj_b.csv"));
  CHECK(a.rfind("t,x,u,v\n", 0) == 0);
  // one row per stored space-time sample plus the header line
  const auto rows = std::count(a.begin(), a.end(), '\n');
  CHECK(rows == 1 + static_cast<long>(traj.times.size()) * g.points());

  write_control_csv("ctrl_a.csv", traj);
  const std::string c = slurp("ctrl_a.csv");
  CHECK(c.rfind("t,cu_left,cu_right,cv_left,cv_right\n", 0) == 0);
  CHECK(std::count(c.begin(), c.end(), '\n') ==
        1 + static_cast<long>(traj.control_times.size()));

  std::remove("traj_a.csv");
  std::remove("traj_b.csv");
  std::remove("ctrl_a.csv");
}

TEST_CASE("profile CSV round trip") {
  Grid g(2.0, 8);
  std::vector<double> vals(g.points());
  for (int i = 0; i < g.points(); ++i) vals[i] = std::sin(1.0 + i) / 3.0;
  write_profile_csv("prof.csv", g, vals);
  const auto rows = read_profile_csv("prof.csv");
  REQUIRE(rows.size() == vals.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].first == g.x[i]);
    CHECK(rows[i].second == vals[i]);
  }
  std::remove("prof.csv");
}

TEST_CASE("plots are byte-identical for identical input and reject empty input") {
  PlotSeries s;
  s.x = {0, 0.5, 1};
  s.y = {0, 0.25, 0};
  s.label = "u";
  emit_plot("plot_a.svg", "demo", {s});
  emit_plot("plot_b.svg", "demo", {s});
  const std::string a = slurp("plot_a.svg");
  CHECK(a == slurp("plot_b.svg"));
  CHECK(a.find("<svg") != std::string::npos);
  CHECK(a.find("polyline") != std::string::npos);
  CHECK_THROWS_AS(emit_plot("plot_c.svg", "empty", {}), ConfigError);
  std::remove("plot_a.svg");
  std::remove("plot_b.svg");
}

}  // TEST_SUITE
