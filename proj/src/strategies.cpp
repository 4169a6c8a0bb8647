#include "lvc/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <sstream>

#include "lvc/errors.hpp"

namespace lvc {

namespace {
constexpr double kPi = std::numbers::pi;
}

const char* to_string(Target t) {
  switch (t) {
    case Target::coexistence: return "coexistence";
    case Target::u_only: return "u_only";
    case Target::v_only: return "v_only";
    case Target::extinction: return "extinction";
    case Target::heterogeneous: return "heterogeneous";
  }
  return "?";
}

BoundaryValues target_boundary_values(Target t, const Parameters& p) {
  switch (t) {
    case Target::coexistence: {
      const HomogeneousState s = coexistence_state(p);
      return {s.u_star, s.u_star, s.v_star, s.v_star};
    }
    case Target::u_only: return {1, 1, 0, 0};
    case Target::v_only: return {0, 0, p.a, p.a};
    case Target::extinction:
    case Target::heterogeneous: return {0, 0, 0, 0};
  }
  return {};
}

StrategyOutcome neumann_shadow(const FieldPair& initial, const Parameters& p,
                               const Grid& g, const SimulateOptions& opt) {
  const Regime regime = classify_regime(p);
  double tu = 0, tv = 0;
  switch (regime) {
    case Regime::coexistence: {
      const HomogeneousState s = coexistence_state(p);
      tu = s.u_star;
      tv = s.v_star;
      break;
    }
    case Regime::u_dominant: tu = 1; tv = 0; break;
    case Regime::v_dominant: tu = 0; tv = p.a; break;
  }
  const FieldPair target = FieldPair::uniform(g, tu, tv);

  SimulateOptions run = opt;
  if (run.snapshot_stride <= 0) {
    const long steps = std::lround(std::ceil(run.t_end / run.dt - 1e-12));
    run.snapshot_stride = std::max(1L, steps / 400);
  }
  Trajectory shadow = simulate_neumann(initial, p, g, run, &target);

  BoundaryControl control =
      BoundaryControl::sampled(shadow.control_times, shadow.control_record);

  // Feeding the recorded traces back through the Dirichlet solver must
  // reproduce the zero-flux run; anything else means the trace bookkeeping
  // and the scheme disagree.
  SimulateOptions replay = run;
  replay.settle_tol = 0;
  replay.max_steps = static_cast<long>(shadow.control_times.size());
  Trajectory controlled = simulate(initial, control, p, g, replay, &target);

  const std::size_t m = std::min(shadow.snapshots.size(), controlled.snapshots.size());
  double mismatch = 0;
  for (std::size_t i = 0; i < m; ++i)
    mismatch = std::max(mismatch, sup_distance(shadow.snapshots[i], controlled.snapshots[i]));
  if (mismatch > 1e-6) {
    std::ostringstream msg;
    msg << "neumann shadow: trace replay deviates by " << mismatch;
    throw ConvergenceError(msg.str());
  }

  StrategyOutcome out;
  out.trajectory = std::move(controlled);
  out.trajectory.settled = shadow.settled;
  out.trajectory.settle_time = shadow.settle_time;
  out.control = std::move(control);
  out.terminal_error = sup_distance_to(out.trajectory.final_state(), tu, tv);
  return out;
}

StaticControlPlan static_control(Target target, const Parameters& p) {
  StaticControlPlan plan;
  std::ostringstream clause;
  switch (target) {
    case Target::u_only: {
      plan.values = {1, 1, 0, 0};
      plan.critical_length = kPi * std::sqrt(p.d2 / p.a);
      plan.certified = p.L <= plan.critical_length;
      clause << "L <= sqrt(d2/a)*pi: " << p.L
             << (plan.certified ? " <= " : " > ") << plan.critical_length;
      break;
    }
    case Target::v_only: {
      plan.values = {0, 0, p.a, p.a};
      plan.critical_length = kPi * std::sqrt(p.d1);
      plan.certified = p.L <= plan.critical_length;
      clause << "L <= sqrt(d1)*pi: " << p.L
             << (plan.certified ? " <= " : " > ") << plan.critical_length;
      break;
    }
    case Target::extinction: {
      plan.values = {0, 0, 0, 0};
      plan.critical_length = std::min(kPi * std::sqrt(p.d1), kPi * std::sqrt(p.d2 / p.a));
      plan.certified = p.L <= plan.critical_length;
      clause << "L <= min(sqrt(d1), sqrt(d2/a))*pi: " << p.L
             << (plan.certified ? " <= " : " > ") << plan.critical_length;
      break;
    }
    case Target::heterogeneous: {
      plan.values = {0, 0, 0, 0};
      const bool shape_ok = std::abs(p.a - 1.0) <= 1e-12 &&
                            std::abs(p.d1 - p.d2) <= 1e-12 * std::max(p.d1, p.d2);
      plan.critical_length = kPi * std::sqrt(p.d1);
      plan.certified = shape_ok && p.L > plan.critical_length;
      if (!shape_ok)
        clause << "requires a = 1 and d1 = d2";
      else
        clause << "L > sqrt(d)*pi: " << p.L << (plan.certified ? " > " : " <= ")
               << plan.critical_length;
      break;
    }
    case Target::coexistence:
      throw PreconditionError("no static control certificate exists for the coexistence target");
  }
  plan.control = BoundaryControl::constant(plan.values);
  plan.clause = clause.str();
  return plan;
}

namespace {

// Owns a copy of the profile so the emitted control outlives the caller's wave.
struct WaveTrace {
  std::shared_ptr<const TravelingWave> wave;
  double c, shift, t1, L;

  BoundaryValues operator()(double t) const {
    const double offset = c * (t - t1) + shift;
    return {wave->eval_u(offset), wave->eval_u(L + offset), wave->eval_v(offset),
            wave->eval_v(L + offset)};
  }
};

}  // namespace

WaveStrategyOutcome traveling_wave_strategy(const FieldPair& initial, const Parameters& p,
                                            const Grid& g, const TravelingWave& wave,
                                            const SimulateOptions& opt) {
  if (!(p.a < 1.0) || !has_coexistence_state(p))
    throw PreconditionError("wave strategy requires a < 1 and k2 < a < 1/k1");
  if (p.L > std::sqrt(p.d1) * kPi)
    throw PreconditionError("wave strategy requires L <= sqrt(d1)*pi");
  const HomogeneousState star = coexistence_state(p);
  if (std::abs(wave.u_star - star.u_star) > 1e-9 || std::abs(wave.a - p.a) > 1e-9)
    throw PreconditionError("wave profile was computed for different parameters");
  if (box_violation(initial, p.a) > 0)
    throw PreconditionError("wave strategy: initial data outside the state box");

  const double margin = 1e-3;
  const long steps = std::lround(std::ceil(opt.t_end / opt.dt - 1e-12));
  int stride = opt.snapshot_stride > 0 ? opt.snapshot_stride : std::max(1L, steps / 400);

  Stepper stepper(p, g, opt.dt);
  const int n = g.interior;

  Trajectory traj;
  traj.times.push_back(0.0);
  traj.snapshots.push_back(initial);

  FieldPair state = initial;
  const BoundaryValues phase1_bc{0, 0, p.a, p.a};

  // Phase 1: static (0, a) until the state sits strictly inside the strip
  // (0, u*) x (v*, a) on the interior nodes, with a small margin standing in
  // for the open inequalities.
  long k = 0;
  double t1 = -1;
  for (; k < steps; ++k) {
    const double t_next = (k + 1) * opt.dt;
    stepper.dirichlet_step(state, phase1_bc);
    traj.control_times.push_back(t_next);
    traj.control_record.push_back(phase1_bc);
    if ((k + 1) % stride == 0 || k + 1 == steps) {
      traj.times.push_back(t_next);
      traj.snapshots.push_back(state);
    }
    bool inside = true;
    for (int i = 1; i <= n && inside; ++i)
      inside = state.u[i] >= margin && state.u[i] <= star.u_star - margin &&
               state.v[i] >= star.v_star + margin && state.v[i] <= p.a - margin;
    if (inside) {
      t1 = t_next;
      break;
    }
  }
  if (t1 < 0)
    throw ConvergenceError("wave strategy: phase 1 never entered the strip below (u*, v*)");

  // Largest translation that keeps the wave below u and above v at the switch.
  auto ordered = [&](double s) {
    for (int i = 1; i <= n; ++i) {
      const double xs = g.x[i] + s;
      if (!(wave.eval_u(xs) < state.u[i])) return false;
      if (!(wave.eval_v(xs) > state.v[i])) return false;
    }
    return true;
  };
  double lo = -wave.half_width - p.L, hi = wave.half_width + p.L;
  if (!ordered(lo))
    throw ConvergenceError("wave strategy: no admissible translation at the switch time");
  for (int iter = 0; iter < 60; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (ordered(mid) ? lo : hi) = mid;
  }
  const double shift = lo;
  if (shift <= -wave.half_width)
    throw ConvergenceError("wave strategy: translation fell off the truncated window");

  WaveTrace trace{std::make_shared<TravelingWave>(wave), wave.c, shift, t1, p.L};

  // Phase 2: wave traces as controls, with the discretely evolved wave pair
  // tracking the ordering that squeezes the state onto (u*, v*).
  FieldPair sandwich;
  sandwich.u.resize(g.points());
  sandwich.v.resize(g.points());
  for (int i = 0; i < g.points(); ++i) {
    sandwich.u[i] = wave.eval_u(g.x[i] + shift);
    sandwich.v[i] = wave.eval_v(g.x[i] + shift);
  }

  double violation = 0;
  for (++k; k < steps; ++k) {
    const double t_next = (k + 1) * opt.dt;
    const BoundaryValues bc = trace(t_next);
    stepper.dirichlet_step(state, bc);
    stepper.dirichlet_step(sandwich, bc);
    for (int i = 0; i < g.points(); ++i) {
      violation = std::max({violation, sandwich.u[i] - state.u[i],
                            state.u[i] - star.u_star, star.v_star - state.v[i],
                            state.v[i] - sandwich.v[i]});
    }
    traj.control_times.push_back(t_next);
    traj.control_record.push_back(bc);
    const bool settled_now =
        opt.settle_tol > 0 &&
        sup_distance_to(state, star.u_star, star.v_star) <= opt.settle_tol;
    if ((k + 1) % stride == 0 || k + 1 == steps || settled_now) {
      traj.times.push_back(t_next);
      traj.snapshots.push_back(state);
    }
    if (settled_now) {
      traj.settled = true;
      traj.settle_time = t_next;
      break;
    }
  }

  WaveStrategyOutcome out;
  out.outcome.trajectory = std::move(traj);
  out.outcome.phase_switch_time = t1;
  out.outcome.terminal_error =
      sup_distance_to(out.outcome.trajectory.final_state(), star.u_star, star.v_star);
  out.shift = shift;
  out.sandwich_violation = violation;

  BoundaryValues p1 = phase1_bc;
  out.outcome.control = BoundaryControl::from_function([p1, trace, t1](double t) {
    return t <= t1 ? p1 : trace(t);
  });
  return out;
}

ReachOutcome finite_time_reach(const FieldPair& initial, const Parameters& p,
                               const Grid& g, double horizon, double eps, double dt,
                               double t1_max, int max_iters) {
  if (!has_coexistence_state(p))
    throw PreconditionError("finite-time reach targets (u*, v*): requires k2 < a < 1/k1");
  if (!(horizon > 0) || !(eps > 0))
    throw PreconditionError("finite-time reach: horizon and eps must be > 0");
  const HomogeneousState star = coexistence_state(p);
  const FieldPair target = FieldPair::uniform(g, star.u_star, star.v_star);

  ReachOutcome out;
  Trajectory phase1;
  FieldPair at_switch = initial;

  if (sup_distance(initial, target) <= eps) {
    out.t1 = 0;
    phase1.times.push_back(0.0);
    phase1.snapshots.push_back(initial);
  } else {
    SimulateOptions opt;
    opt.t_end = t1_max;
    opt.dt = dt;
    opt.settle_tol = eps;
    opt.settle_consecutive = 1;
    StrategyOutcome shadow = neumann_shadow(initial, p, g, opt);
    if (!shadow.trajectory.settled)
      throw ConvergenceError("finite-time reach: phase 1 did not come within eps of (u*, v*)");
    phase1 = std::move(shadow.trajectory);
    out.t1 = phase1.settle_time;
    at_switch = phase1.final_state();
  }

  TrackingProblem prob{p, g, at_switch, target, dt,
                       static_cast<int>(std::lround(horizon / dt)), 1.0, 0.0};
  ControlVector guess = ControlVector::constant(
      prob.steps, {star.u_star, star.u_star, star.v_star, star.v_star});
  out.optimization = solve_tracking(prob, max_iters, &guess);

  const double t1 = out.t1;
  BoundaryControl phase1_control =
      phase1.control_times.empty()
          ? BoundaryControl::constant({star.u_star, star.u_star, star.v_star, star.v_star})
          : BoundaryControl::sampled(phase1.control_times, phase1.control_record);
  BoundaryControl phase2 = out.optimization.control.as_control(dt);
  out.outcome.control = BoundaryControl::from_function(
      [phase1_control, phase2, t1](double t) {
        return t <= t1 ? phase1_control(t) : phase2(t - t1);
      });

  // Stitch the optimal phase onto the shadow phase for the reported run.
  Trajectory traj = std::move(phase1);
  traj.settled = false;
  traj.settle_time = 0;
  std::vector<FieldPair> states = forward_states(prob, out.optimization.control);
  const int stride = std::max(1, prob.steps / 200);
  for (int s = 1; s <= prob.steps; ++s) {
    const double t = out.t1 + s * dt;
    traj.control_times.push_back(t);
    traj.control_record.push_back(out.optimization.control.step_values(s - 1));
    if (s % stride == 0 || s == prob.steps) {
      traj.times.push_back(t);
      traj.snapshots.push_back(states[s]);
    }
  }

  out.outcome.trajectory = std::move(traj);
  out.outcome.phase_switch_time = out.t1;
  out.outcome.terminal_error = out.optimization.terminal_error;
  return out;
}

}  // namespace lvc
