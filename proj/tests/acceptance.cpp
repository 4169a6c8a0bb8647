// Acceptance suite: every criterion below runs at its stated tolerance and
// prints one pass/fail line. The exit code is the number of failures.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lvc/checker.hpp"
#include "lvc/elliptic.hpp"
#include "lvc/harness.hpp"
#include "lvc/optimize.hpp"
#include "lvc/pde.hpp"
#include "lvc/strategies.hpp"
#include "lvc/wave.hpp"

using namespace lvc;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    ok = ok && cond;
    if (!detail.str().empty()) detail << "; ";
    detail << what << (cond ? " [ok]" : " [FAILED]");
  }
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

const Parameters kReference = validate_parameters(0.01, 0.01, 1, 0.8, 0.7, 1);

// --------------------------------------------------------------------------

Outcome criterion_1_coexistence_formula() {
  Check c;
  const HomogeneousState s = coexistence_state(validate_parameters(1, 1, 1, 0.8, 0.7, 1));
  const double u_exact = 0.2 / 0.44, v_exact = 0.3 / 0.44;
  c.require(std::abs(s.u_star - u_exact) <= 1e-12, "u* matches the formula to 1e-12");
  c.require(std::abs(s.v_star - v_exact) <= 1e-12, "v* matches the formula to 1e-12");
  c.require(std::abs(s.u_star - 0.45) <= 0.01, "u* = " + fmt(s.u_star) + " within 0.01 of 0.45");
  c.require(std::abs(s.v_star - 0.68) <= 0.01, "v* = " + fmt(s.v_star) + " within 0.01 of 0.68");
  return {c.ok, c.detail.str()};
}

Outcome criterion_2_shadow_coexistence() {
  Grid g(kReference.L, 200);
  SimulateOptions opt;
  opt.t_end = 30;
  opt.dt = 1e-3;
  StrategyOutcome out = neumann_shadow(FieldPair::uniform(g, 0.2, 0.5), kReference, g, opt);
  Check c;
  c.require(out.terminal_error <= 0.01,
            "distance to (u*,v*) at t=30 is " + fmt(out.terminal_error) + " <= 0.01");
  return {c.ok, c.detail.str()};
}

Outcome criterion_3_single_species() {
  Check c;
  {
    const Parameters p = validate_parameters(0.01, 0.01, 0.6, 0.8, 0.7, 1);
    Grid g(p.L, 200);
    SimulateOptions opt;
    opt.t_end = 30;
    opt.dt = 1e-3;
    StrategyOutcome out = neumann_shadow(FieldPair::uniform(g, 0.2, 0.5), p, g, opt);
    c.require(out.terminal_error <= 0.05,
              "shadow run: distance to (1,0) at t=30 is " + fmt(out.terminal_error) +
                  " <= 0.05");
  }
  {
    const Parameters p = validate_parameters(0.01, 3, 0.6, 0.8, 0.7, 1);
    Grid g(p.L, 200);
    SimulateOptions opt;
    opt.t_end = 10;
    opt.dt = 1e-3;
    StaticControlPlan plan = static_control(Target::u_only, p);
    Trajectory traj =
        simulate(FieldPair::uniform(g, 0.2, 0.5), plan.control, p, g, opt);
    double vmax = 0, umin = 1;
    for (int i = 0; i < g.points(); ++i) {
      vmax = std::max(vmax, traj.final_state().v[i]);
      umin = std::min(umin, traj.final_state().u[i]);
    }
    c.require(plan.certified, "static (1,0) certified: " + plan.clause);
    c.require(vmax <= 0.02, "static run: ||v(.,10)|| = " + fmt(vmax) + " <= 0.02");
    c.require(umin >= 0.95, "static run: min u(.,10) = " + fmt(umin) + " >= 0.95");
  }
  return {c.ok, c.detail.str()};
}

Outcome criterion_4_extinction_barrier() {
  const Parameters p = validate_parameters(0.01, 4, 1, 0.8, 0.7, 1);
  Grid g(p.L, 200);
  Check c;

  BarrierProfiles barriers = barrier_profiles(p, 200);
  c.require(barriers.eta1.has_value(), "eta1 exists");
  c.require(barriers.critical_length_u &&
                std::abs(*barriers.critical_length_u - 0.70248) < 1e-3,
            "threshold sqrt(d1/(1-a k1))*pi = " + fmt(*barriers.critical_length_u) +
                " < 1");

  BarrierHarnessOptions opt;
  opt.n_controls = 20;
  opt.t_end = 50;
  opt.dt = 1e-3;
  opt.seed = 20240601;
  BarrierReport rep =
      verify_barrier(p, BarrierSpecies::u, FieldPair::uniform(g, 0.8, 0.5), g, opt);
  c.require(rep.min_margin_u >= -1e-8,
            "min over 20 random controls of u - eta1 = " + fmt(rep.min_margin_u) +
                " >= -1e-8");

  SimulateOptions sim;
  sim.t_end = 50;
  sim.dt = 1e-3;
  sim.snapshot_stride = 100;
  Trajectory zero =
      simulate(FieldPair::uniform(g, 0.8, 0.5), BoundaryControl(), p, g, sim);
  double vmin = 1e300;  // interior only; the boundary itself carries the control
  for (const FieldPair& s : zero.snapshots)
    for (int i = 1; i <= g.interior; ++i) vmin = std::min(vmin, s.v[i]);
  c.require(vmin < 0.05,
            "under zero controls interior min of v dips to " + fmt(vmin) + " < 0.05");
  return {c.ok, c.detail.str()};
}

Outcome criterion_5_steady_barrier_pair() {
  Check c;
  const double lc_u = std::numbers::pi * std::sqrt(0.01 / 0.2);
  const double lc_v = std::numbers::pi * std::sqrt(0.01 / 0.3);
  c.require(kReference.L > std::max(lc_u, lc_v),
            "L = 1 > max(" + fmt(lc_u) + ", " + fmt(lc_v) + ")");

  CoupledSteadyState cs = solve_coupled_steady(kReference, 200);
  c.require(std::abs(cs.eta - 0.1013) < 1e-3, "eta = " + fmt(cs.eta) + " ~ 0.1013");
  c.require(std::abs(cs.delta - 0.2013) < 1e-3, "delta = " + fmt(cs.delta) + " ~ 0.2013");
  bool sandwich = true;
  for (std::size_t i = 0; i < cs.u_s.size(); ++i)
    sandwich = sandwich && cs.u_s[i] >= cs.lower_u[i] - 1e-9 && cs.u_s[i] <= 1 + 1e-9 &&
               cs.v_s[i] >= cs.lower_v[i] - 1e-9 && cs.v_s[i] <= kReference.a + 1e-9;
  c.require(sandwich, "eta*phi <= u_s <= 1 and delta*phi <= v_s <= a pointwise");

  Grid g(kReference.L, 200);
  BarrierHarnessOptions opt;
  opt.n_controls = 20;
  opt.t_end = 50;
  opt.dt = 1e-3;
  opt.seed = 424242;
  SteadyBarrierReport rep =
      verify_steady_barrier(kReference, FieldPair::uniform(g, 0.0, kReference.a), g, opt);
  c.require(rep.pass, "20 random controls stay on the barred side (max excess " +
                          fmt(std::max(rep.max_excess_u, rep.max_deficit_v)) + ")");
  return {c.ok, c.detail.str()};
}

Outcome criterion_6_heterogeneous_attractor() {
  Check c;
  HeterogeneousState target = heterogeneous_coexistence(kReference, 200);
  Grid g(kReference.L, 200);
  FieldPair target_field;
  target_field.u = target.u.values;
  target_field.v = target.v.values;

  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int run = 0; run < 3; ++run) {
    FieldPair f0;
    f0.u.resize(g.points());
    f0.v.resize(g.points());
    for (int i = 0; i < g.points(); ++i) {
      f0.u[i] = unit(rng);
      f0.v[i] = kReference.a * unit(rng);
    }
    SimulateOptions opt;
    opt.t_end = 200;
    opt.dt = 0.05;
    opt.snapshot_stride = 1 << 28;
    Trajectory traj = simulate(f0, BoundaryControl(), kReference, g, opt);
    const double dist = sup_distance(traj.final_state(), target_field);
    c.require(dist <= 1e-3,
              "random start " + std::to_string(run) + " lands on (u**,v**): err " + fmt(dist));
    bool ratio_ok = true;
    double worst = 0;
    for (int i = 0; i < g.points(); ++i) {
      if (traj.final_state().u[i] > 0.01) {
        const double r = traj.final_state().v[i] / traj.final_state().u[i];
        worst = std::max(worst, std::abs(r - 1.5));
        ratio_ok = ratio_ok && std::abs(r - 1.5) <= 1e-3;
      }
    }
    c.require(ratio_ok, "pointwise v/u = 1.5 (worst dev " + fmt(worst) + ")");
  }
  return {c.ok, c.detail.str()};
}

Outcome criterion_7_elliptic_quality() {
  Check c;
  double worst = 0;
  worst = std::max(worst, solve_logistic_bvp(0.01, 1.0, 1.0, 1.0, 200).residual_norm);
  worst = std::max(worst, solve_logistic_bvp(0.01, 0.2, 1.0, 1.0, 200).residual_norm);
  worst = std::max(worst, solve_logistic_bvp(4.0, 0.3, 1.0, 12.0, 200).residual_norm);
  c.require(worst <= 1e-10, "profile residuals <= 1e-10 (worst " + fmt(worst) + ")");

  std::vector<Profile> levels;
  for (int n : {99, 199, 399}) levels.push_back(solve_logistic_bvp(0.01, 1.0, 1.0, 1.0, n));
  std::vector<double> errs;
  for (int l = 0; l < 2; ++l) {
    double err = 0;
    for (std::size_t i = 0; i < levels[l].values.size(); ++i)
      err = std::max(err, std::abs(levels[l].values[i] - levels[l + 1].values[2 * i]));
    errs.push_back(err);
  }
  const double slope = std::log2(errs[0] / errs[1]);
  c.require(std::abs(slope - 2.0) <= 0.2,
            "Richardson slope on theta = " + fmt(slope) + " within 2 +- 0.2");
  return {c.ok, c.detail.str()};
}

Outcome criterion_8_traveling_wave() {
  Check c;
  const Parameters p = validate_parameters(1, 1, 0.9, 0.8, 0.7, 1);
  const double c_star = min_wave_speed(p);
  c.require(std::abs(c_star - 1.596) < 1e-3, "threshold speed " + fmt(c_star));

  TravelingWave wave = traveling_wave_profile(p, 2.0, 40, 2400);
  double defect = 0;
  for (std::size_t i = 0; i + 1 < wave.U.size(); ++i) {
    defect = std::max(defect, wave.U[i] - wave.U[i + 1]);
    defect = std::max(defect, wave.V[i + 1] - wave.V[i]);
  }
  c.require(defect <= 1e-8, "monotonicity violation " + fmt(defect) + " <= 1e-8");
  c.require(wave.tail_error <= 1e-3,
            "endpoint error " + fmt(wave.tail_error) + " <= 1e-3");

  Grid g(p.L, 100);
  SimulateOptions opt;
  opt.t_end = 60;
  opt.dt = 0.01;
  WaveStrategyOutcome out =
      traveling_wave_strategy(FieldPair::uniform(g, 0.5, 0.5), p, g, wave, opt);
  c.require(out.sandwich_violation <= 1e-8,
            "sandwich violation along the controlled run " + fmt(out.sandwich_violation) +
                " <= 1e-8");
  c.require(out.outcome.terminal_error <= 1e-2,
            "squeeze reaches (u*,v*): terminal error " + fmt(out.outcome.terminal_error));
  return {c.ok, c.detail.str()};
}

Outcome criterion_9_adjoint_exactness() {
  Check c;
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0;
  for (int instance = 0; instance < 10; ++instance) {
    const Parameters p = validate_parameters(0.02 + 0.2 * unit(rng), 0.02 + 0.2 * unit(rng),
                                             0.5 + unit(rng), 0.1 + 0.8 * unit(rng),
                                             0.1 + 0.8 * unit(rng), 0.5 + unit(rng));
    Grid g(p.L, 20);
    FieldPair f0;
    f0.u.resize(g.points());
    f0.v.resize(g.points());
    for (int i = 0; i < g.points(); ++i) {
      f0.u[i] = unit(rng);
      f0.v[i] = p.a * unit(rng);
    }
    const HomogeneousState* star = nullptr;
    FieldPair target = FieldPair::uniform(g, 0.5, 0.5 * p.a);
    (void)star;
    TrackingProblem prob{p, g, f0, target, std::min(1e-3, 0.9 * max_stable_dt(p)), 50,
                         1.0, unit(rng)};
    ControlVector control;
    control.steps = 50;
    control.data.resize(200);
    for (double& x : control.data) x = unit(rng);
    for (int k = 0; k < 50; ++k) {
      control.data[4 * k + 2] *= p.a;
      control.data[4 * k + 3] *= p.a;
    }
    const std::vector<FieldPair> states = forward_states(prob, control);
    const ControlVector grad = adjoint_gradient(prob, control, states);
    double gmax = 0;
    for (double v : grad.data) gmax = std::max(gmax, std::abs(v));
    for (int i = 0; i < 200; ++i) {
      ControlVector cp = control;
      const double eps = 3e-6;
      cp.data[i] += eps;
      const double up = objective_value(prob, forward_states(prob, cp));
      cp.data[i] -= 2 * eps;
      const double dn = objective_value(prob, forward_states(prob, cp));
      const double fd = (up - dn) / (2 * eps);
      worst = std::max(worst, std::abs(fd - grad.data[i]) / std::max(gmax, 1e-12));
    }
  }
  c.require(worst <= 1e-5,
            "10 random coarse instances: worst relative gradient error " + fmt(worst) +
                " <= 1e-5");
  return {c.ok, c.detail.str()};
}

Outcome criterion_10_finite_time_reach() {
  Check c;
  Grid g(kReference.L, 200);
  ReachOutcome out = finite_time_reach(FieldPair::uniform(g, 0.2, 0.5), kReference, g,
                                       2.0, 0.05, 1e-3, 30.0, 600);
  bool box_ok = true;
  for (int k = 0; k < out.optimization.control.steps; ++k)
    box_ok = box_ok && admissible(out.optimization.control.step_values(k), kReference.a);
  for (const BoundaryValues& b : out.outcome.trajectory.control_record)
    box_ok = box_ok && admissible(b, kReference.a);
  c.require(box_ok, "all controls inside [0,1]x[0,a] exactly");
  // At d = 0.01 the boundary cannot reach the domain center within T = 2, so
  // the attainable floor sits near 3e-2 whatever the optimizer does; the gate
  // stays as stated and this line reports the honest result (see README).
  c.require(out.optimization.terminal_error <= 1e-3,
            "terminal error " + fmt(out.optimization.terminal_error) +
                " <= 1e-3 (switch at t1 = " + fmt(out.t1) + ")");
  return {c.ok, c.detail.str()};
}

Outcome criterion_11_turnpike() {
  Check c;
  Grid g(kReference.L, 100);
  const HomogeneousState s = coexistence_state(kReference);
  TrackingProblem prob{kReference, g, FieldPair::uniform(g, 0.2, 0.5),
                       FieldPair::uniform(g, s.u_star, s.v_star), 0.01, 1800, 1.0, 1.0};
  OptimizationResult res = solve_tracking(prob, 300);
  c.require(res.turnpike_fraction >= 0.6,
            "turnpike fraction " + fmt(res.turnpike_fraction) +
                " >= 0.6 (terminal error " + fmt(res.terminal_error) + ")");
  return {c.ok, c.detail.str()};
}

Outcome criterion_12_property_suites() {
  Check c;
  // invariant region, 1000 randomized admissible scenarios
  {
    std::mt19937_64 rng(1001);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      Parameters p{0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
      for (;;) {
        p = Parameters{std::pow(10.0, -3 + 3 * unit(rng)), std::pow(10.0, -3 + 3 * unit(rng)),
                       0.15 + 2.0 * unit(rng), 0.05 + 0.9 * unit(rng),
                       0.05 + 0.9 * unit(rng), 0.3 + 2.0 * unit(rng)};
        if (std::abs(p.k2 - p.a) > 1e-3 && std::abs(p.a * p.k1 - 1) > 1e-3) break;
      }
      Grid g(p.L, 24);
      FieldPair f0;
      f0.u.resize(g.points());
      f0.v.resize(g.points());
      for (int i = 0; i < g.points(); ++i) {
        f0.u[i] = unit(rng);
        f0.v[i] = p.a * unit(rng);
      }
      const double dt = (0.5 + 0.5 * unit(rng)) * max_stable_dt(p);
      Stepper stepper(p, g, dt);
      std::mt19937_64 crng(rng());
      std::uniform_real_distribution<double> cu(0.0, 1.0);
      FieldPair state = f0;
      for (int k = 0; k < 50; ++k) {
        if (k % 10 == 0) (void)0;
        const BoundaryValues bc{cu(crng), cu(crng), p.a * cu(crng), p.a * cu(crng)};
        stepper.dirichlet_step(state, bc);
        worst = std::max(worst, box_violation(state, p.a));
      }
    }
    c.require(worst <= 1e-12,
              "invariant region over 1000 scenarios (worst violation " + fmt(worst) + ")");
  }

  // discrete comparison over 200 ordered pairs
  {
    std::mt19937_64 rng(2002);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = -1e300;
    for (int trial = 0; trial < 200; ++trial) {
      Parameters p{0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
      for (;;) {
        p = Parameters{std::pow(10.0, -3 + 3 * unit(rng)), std::pow(10.0, -3 + 3 * unit(rng)),
                       0.15 + 2.0 * unit(rng), 0.05 + 0.9 * unit(rng),
                       0.05 + 0.9 * unit(rng), 0.3 + 2.0 * unit(rng)};
        if (std::abs(p.k2 - p.a) > 1e-3 && std::abs(p.a * p.k1 - 1) > 1e-3) break;
      }
      Grid g(p.L, 20);
      FieldPair hi, lo;
      hi.u.resize(g.points());
      hi.v.resize(g.points());
      lo = hi;
      for (int i = 0; i < g.points(); ++i) {
        const double u1 = unit(rng), u2 = unit(rng);
        const double v1 = p.a * unit(rng), v2 = p.a * unit(rng);
        hi.u[i] = std::max(u1, u2);
        lo.u[i] = std::min(u1, u2);
        hi.v[i] = std::min(v1, v2);  // pair A carries the lower v
        lo.v[i] = std::max(v1, v2);
      }
      const double dt = 0.9 * max_stable_dt(p);
      Stepper stepper(p, g, dt);
      for (int k = 0; k < 50; ++k) {
        const double cu1 = unit(rng), cu2 = unit(rng);
        const double cv1 = p.a * unit(rng), cv2 = p.a * unit(rng);
        const BoundaryValues bc_hi{std::max(cu1, cu2), std::max(cu1, cu2),
                                   std::min(cv1, cv2), std::min(cv1, cv2)};
        const BoundaryValues bc_lo{std::min(cu1, cu2), std::min(cu1, cu2),
                                   std::max(cv1, cv2), std::max(cv1, cv2)};
        stepper.dirichlet_step(hi, bc_hi);
        stepper.dirichlet_step(lo, bc_lo);
        for (int i = 0; i < g.points(); ++i) {
          worst = std::max(worst, lo.u[i] - hi.u[i]);
          worst = std::max(worst, hi.v[i] - lo.v[i]);
        }
      }
    }
    c.require(worst <= 1e-10,
              "comparison ordering over 200 pairs (worst crossing " + fmt(worst) + ")");
  }

  // checker clause disjointness and 1-D/eigenvalue consistency over 1e4 draws
  {
    std::mt19937_64 rng(3003);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    bool all_ok = true;
    for (int trial = 0; trial < 10000 && all_ok; ++trial) {
      Parameters p{0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
      for (;;) {
        p = Parameters{std::pow(10.0, -3 + 3.3 * unit(rng)),
                       std::pow(10.0, -3 + 3.3 * unit(rng)), 0.15 + 2.3 * unit(rng),
                       0.05 + 0.9 * unit(rng), 0.05 + 0.9 * unit(rng),
                       0.3 + 2.2 * unit(rng)};
        if (std::abs(p.k2 - p.a) > 1e-6 && std::abs(p.a * p.k1 - 1) > 1e-6) break;
      }
      const double lambda0 = std::numbers::pi * std::numbers::pi / (p.L * p.L);
      const std::vector<Verdict> v1 = check_all_targets(p);
      const std::vector<Verdict> v2 =
          check_all_targets_nd(NdParameters{p.d1, p.d2, p.a, p.k1, p.k2}, lambda0);
      for (std::size_t i = 0; i < v1.size(); ++i) {
        all_ok = all_ok && v1[i].status == v2[i].status;
        // a verdict is never double-booked: one status per target by
        // construction, so check the clauses directly
        const double ru = (1 - p.a * p.k1) / p.d1, rv = (p.a - p.k2) / p.d2;
        const bool coexist = p.k2 < p.a && p.a * p.k1 < 1;
        const bool barrier_pair = coexist && lambda0 < ru && lambda0 < rv;
        bool sufficient = false;
        switch (v1[i].target) {
          case Target::coexistence: sufficient = coexist; break;
          case Target::u_only: sufficient = lambda0 >= p.a / p.d2 || p.k2 > p.a; break;
          case Target::v_only: sufficient = lambda0 >= 1 / p.d1 || p.k1 > 1 / p.a; break;
          case Target::extinction:
            sufficient = lambda0 >= 1 / p.d1 && lambda0 >= p.a / p.d2;
            break;
          case Target::heterogeneous: sufficient = false; break;
        }
        const bool barrier =
            v1[i].target == Target::extinction
                ? ((p.a * p.k1 < 1 && lambda0 < ru) || (p.a > p.k2 && lambda0 < rv))
                : (v1[i].target == Target::u_only || v1[i].target == Target::v_only)
                      ? barrier_pair
                      : false;
        all_ok = all_ok && !(sufficient && barrier);
      }
    }
    c.require(all_ok, "checker disjointness and 1-D/eigenvalue agreement over 1e4 draws");
  }
  return {c.ok, c.detail.str()};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"1. homogeneous coexistence state formula", criterion_1_coexistence_formula},
      {"2. shadow control reaches (u*,v*)", criterion_2_shadow_coexistence},
      {"3. single-species steering", criterion_3_single_species},
      {"4. extinction barrier blocks u", criterion_4_extinction_barrier},
      {"5. coupled steady barrier pair", criterion_5_steady_barrier_pair},
      {"6. heterogeneous coexistence attractor", criterion_6_heterogeneous_attractor},
      {"7. elliptic solver quality", criterion_7_elliptic_quality},
      {"8. traveling wave and sandwich", criterion_8_traveling_wave},
      {"9. adjoint gradient exactness", criterion_9_adjoint_exactness},
      {"10. finite-time reach to (u*,v*)", criterion_10_finite_time_reach},
      {"11. turnpike fraction of the tracking optimum", criterion_11_turnpike},
      {"12. property suites", criterion_12_property_suites},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    Outcome outcome{false, ""};
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::printf("[%s] %s\n        %s\n", outcome.pass ? "PASS" : "FAIL", criterion.name,
                outcome.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures;
}
