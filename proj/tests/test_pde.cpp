#include <doctest.h>

#include <cmath>
#include <random>

#include "lvc/errors.hpp"
#include "lvc/pde.hpp"
#include "test_util.hpp"

using namespace lvc;

TEST_SUITE("pde") {

TEST_CASE("stable step bound") {
  CHECK(max_stable_dt(validate_parameters(1, 1, 1, 0.8, 0.7, 1)) ==
        doctest::Approx(0.5 / 3.8).epsilon(1e-14));
  CHECK(max_stable_dt(validate_parameters(1, 1, 0.6, 0.8, 0.7, 1)) ==
        doctest::Approx(0.5 / 3.48).epsilon(1e-14));
  const Parameters p = validate_parameters(0.01, 0.01, 1, 0.8, 0.7, 1);
  Grid g(p.L, 20);
  CHECK_THROWS_AS(Stepper(p, g, 1.01 * max_stable_dt(p)), PreconditionError);
}

TEST_CASE("equilibria are fixed points of the step") {
  const Parameters p = validate_parameters(0.01, 0.01, 1, 0.8, 0.7, 1);
  Grid g(p.L, 50);

  FieldPair zero = FieldPair::uniform(g, 0, 0);
  FieldPair next = step(zero, p, g, {0, 0, 0, 0}, 0.1);
  CHECK(sup_distance(zero, next) == 0.0);

  FieldPair u_only = FieldPair::uniform(g, 1, 0);
  next = step(u_only, p, g, {1, 1, 0, 0}, 0.1);
  CHECK(sup_distance(u_only, next) <= 1e-14);

  const HomogeneousState s = coexistence_state(p);
  FieldPair star = FieldPair::uniform(g, s.u_star, s.v_star);
  next = step(star, p, g, {s.u_star, s.u_star, s.v_star, s.v_star}, 0.1);
  CHECK(sup_distance(star, next) <= 1e-10);
}

TEST_CASE("uniform coexistence state drifts less than 1e-8 over 1e4 steps") {
  const Parameters p = validate_parameters(0.01, 0.01, 1, 0.8, 0.7, 1);
  Grid g(p.L, 50);
  const HomogeneousState s = coexistence_state(p);
  FieldPair star = FieldPair::uniform(g, s.u_star, s.v_star);
  FieldPair state = star;
  Stepper stepper(p, g, 0.01);
  const BoundaryValues bc{s.u_star, s.u_star, s.v_star, s.v_star};
  for (int k = 0; k < 10000; ++k) stepper.dirichlet_step(state, bc);
  CHECK(sup_distance(state, star) <= 1e-8);
}

TEST_CASE("zero data with zero controls stays identically zero") {
  const Parameters p = validate_parameters(0.05, 0.02, 0.7, 0.4, 0.3, 2);
  Grid g(p.L, 40);
  SimulateOptions opt;
  opt.t_end = 3;
  opt.dt = 0.05;
  Trajectory traj = simulate(FieldPair::uniform(g, 0, 0), BoundaryControl(), p, g, opt);
  for (const FieldPair& s : traj.snapshots)
    CHECK(sup_distance_to(s, 0, 0) == 0.0);
}

TEST_CASE("invariant region holds for randomized scenarios") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const Parameters p = testutil::random_parameters(rng);
    Grid g(p.L, 24);
    const FieldPair initial = testutil::random_field(rng, g, p.a);
    SimulateOptions opt;
    opt.dt = 0.9 * max_stable_dt(p);
    opt.t_end = 50 * opt.dt;
    opt.snapshot_stride = 1;
    const BoundaryControl control = testutil::random_piecewise_control(rng, p.a, opt.t_end, 7);
    Trajectory traj = simulate(initial, control, p, g, opt);
    for (const FieldPair& s : traj.snapshots) CHECK(box_violation(s, p.a) <= 1e-12);
  }
}

TEST_CASE("neumann runs stay in the box and conserve uniform equilibria") {
  const Parameters p = validate_parameters(0.3, 0.2, 0.8, 0.5, 0.4, 1.5);
  Grid g(p.L, 30);
  SimulateOptions opt;
  opt.t_end = 2;
  opt.dt = 0.05;
  Trajectory traj = simulate_neumann(FieldPair::uniform(g, 0.4, 0.3), p, g, opt);
  for (const FieldPair& s : traj.snapshots) CHECK(box_violation(s, p.a) <= 1e-12);
  // uniform data under zero flux follow the space-free dynamics: stay uniform
  const FieldPair& last = traj.final_state();
  for (int i = 0; i < g.points(); ++i) {
    CHECK(last.u[i] == doctest::Approx(last.u[0]).epsilon(1e-12));
    CHECK(last.v[i] == doctest::Approx(last.v[0]).epsilon(1e-12));
  }
}

TEST_CASE("mesh convergence: second order in space, first order in time") {
  const Parameters p = validate_parameters(0.1, 0.1, 1, 0.8, 0.7, 1);
  const HomogeneousState s = coexistence_state(p);
  const BoundaryValues bc{s.u_star, s.u_star, s.v_star, s.v_star};
  const BoundaryControl control = BoundaryControl::constant(bc);

  // boundary-compatible smooth initial data
  auto initial = [&](const Grid& g) {
    FieldPair f = FieldPair::uniform(g, s.u_star, s.v_star);
    for (int i = 0; i < g.points(); ++i) {
      f.u[i] += 0.2 * std::sin(std::numbers::pi * g.x[i] / p.L);
      f.v[i] -= 0.1 * std::sin(std::numbers::pi * g.x[i] / p.L);
    }
    return f;
  };

  SUBCASE("space") {
    // pair differences between nested grids (24|49, 49|99) scale like h^2
    const double dt = 2e-5, T = 0.25;
    auto run = [&](int n) {
      Grid g(p.L, n);
      SimulateOptions opt;
      opt.t_end = T;
      opt.dt = dt;
      opt.snapshot_stride = 1 << 28;  // keep the final state only
      return simulate(initial(g), control, p, g, opt).final_state();
    };
    std::vector<FieldPair> levels = {run(24), run(49), run(99)};
    std::vector<double> errs;
    for (std::size_t l = 0; l + 1 < levels.size(); ++l) {
      double err = 0;
      for (std::size_t i = 0; i < levels[l].u.size(); ++i) {
        err = std::max(err, std::abs(levels[l].u[i] - levels[l + 1].u[2 * i]));
        err = std::max(err, std::abs(levels[l].v[i] - levels[l + 1].v[2 * i]));
      }
      errs.push_back(err);
    }
    const double slope = std::log2(errs[0] / errs[1]);
    CHECK(slope == doctest::Approx(2.0).epsilon(0.15));
  }

  SUBCASE("time") {
    Grid g(p.L, 49);
    const FieldPair f0 = initial(g);
    auto run = [&](double dt) {
      SimulateOptions opt;
      opt.t_end = 0.5;
      opt.dt = dt;
      opt.snapshot_stride = 1 << 28;
      return simulate(f0, control, p, g, opt).final_state();
    };
    const FieldPair y1 = run(4e-3), y2 = run(2e-3), y3 = run(1e-3);
    const double slope = std::log2(sup_distance(y1, y2) / sup_distance(y2, y3));
    CHECK(slope == doctest::Approx(1.0).epsilon(0.3));
  }
}

TEST_CASE("settle detection reports the first stable snapshot") {
  const Parameters p = validate_parameters(0.5, 0.5, 1, 0.5, 0.5, 1);
  Grid g(p.L, 30);
  const HomogeneousState s = coexistence_state(p);
  const FieldPair target = FieldPair::uniform(g, s.u_star, s.v_star);
  SimulateOptions opt;
  opt.t_end = 200;
  opt.dt = 0.05;
  opt.settle_tol = 1e-4;
  opt.snapshot_stride = 10;
  const BoundaryControl control =
      BoundaryControl::constant({s.u_star, s.u_star, s.v_star, s.v_star});
  Trajectory traj = simulate(FieldPair::uniform(g, 0.3, 0.6), control, p, g, opt, &target);
  REQUIRE(traj.settled);
  CHECK(traj.settle_time < 150);
  CHECK(traj.final_time() < 200);
  CHECK(sup_distance(traj.final_state(), target) <= 1e-4);
}

TEST_CASE("sampled controls interpolate linearly and clamp outside the range") {
  BoundaryControl c = BoundaryControl::sampled(
      {0.0, 1.0, 3.0},
      {{0.0, 1.0, 0.0, 0.5}, {1.0, 0.0, 0.5, 0.5}, {1.0, 0.0, 0.0, 0.5}});
  CHECK(c(-1.0).u_left == 0.0);
  CHECK(c(0.5).u_left == doctest::Approx(0.5));
  CHECK(c(0.5).u_right == doctest::Approx(0.5));
  CHECK(c(2.0).v_left == doctest::Approx(0.25));
  CHECK(c(7.0).u_left == 1.0);

  BoundaryControl pc = BoundaryControl::piecewise_constant(
      {0.0, 1.0}, {{0.2, 0.2, 0.2, 0.2}, {0.8, 0.8, 0.8, 0.8}});
  CHECK(pc(0.999).u_left == doctest::Approx(0.2));
  CHECK(pc(1.0).u_left == doctest::Approx(0.8));
  CHECK_THROWS(BoundaryControl::sampled({1.0, 0.5}, {{}, {}}));
}

TEST_CASE("inadmissible boundary data is rejected") {
  const Parameters p = validate_parameters(0.1, 0.1, 0.5, 0.5, 0.4, 1);
  Grid g(p.L, 10);
  FieldPair f = FieldPair::uniform(g, 0.2, 0.2);
  CHECK_THROWS_AS(step(f, p, g, {1.2, 0, 0, 0}, 0.01), PreconditionError);
  CHECK_THROWS_AS(step(f, p, g, {0, 0, 0.6, 0}, 0.01), PreconditionError);
}

}  // TEST_SUITE
