#include "lvc/optimize.hpp"

#include <algorithm>
#include <cmath>

#include "lvc/errors.hpp"
#include "lvc/pde.hpp"
#include "lvc/tridiag.hpp"

namespace lvc {

ControlVector ControlVector::constant(int steps, const BoundaryValues& values) {
  ControlVector c;
  c.steps = steps;
  c.data.resize(4 * static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    c.data[4 * k + 0] = values.u_left;
    c.data[4 * k + 1] = values.u_right;
    c.data[4 * k + 2] = values.v_left;
    c.data[4 * k + 3] = values.v_right;
  }
  return c;
}

BoundaryValues ControlVector::step_values(int step) const {
  return {data[4 * step + 0], data[4 * step + 1], data[4 * step + 2], data[4 * step + 3]};
}

BoundaryControl ControlVector::as_control(double dt) const {
  const int n = steps;
  std::vector<double> vals = data;
  return BoundaryControl::from_function([vals, dt, n](double t) {
    long k = std::lround(t / dt) - 1;
    k = std::clamp<long>(k, 0, n - 1);
    return BoundaryValues{vals[4 * k + 0], vals[4 * k + 1], vals[4 * k + 2],
                          vals[4 * k + 3]};
  });
}

namespace {

void check_problem(const TrackingProblem& prob) {
  if (prob.steps < 1) throw PreconditionError("tracking: need at least one step");
  if (prob.initial.u.size() != static_cast<std::size_t>(prob.grid.points()) ||
      prob.target.u.size() != static_cast<std::size_t>(prob.grid.points()))
    throw PreconditionError("tracking: fields do not match the grid");
  if (box_violation(prob.initial, prob.p.a) > 0)
    throw PreconditionError("tracking: initial data outside the state box");
}

// trapezoid weight for node j
inline double trapz(int j, int last) { return (j == 0 || j == last) ? 0.5 : 1.0; }

double state_misfit(const TrackingProblem& prob, const FieldPair& s) {
  const int last = prob.grid.points() - 1;
  double sum = 0;
  for (int j = 0; j <= last; ++j) {
    const double du = s.u[j] - prob.target.u[j];
    const double dv = s.v[j] - prob.target.v[j];
    sum += trapz(j, last) * (du * du + dv * dv);
  }
  return prob.grid.h * sum;
}

// weight of the misfit at step k in the total objective
inline double level_weight(const TrackingProblem& prob, int k) {
  double w = prob.w_running * prob.dt;
  if (k == prob.steps) w += prob.w_terminal;
  return w;
}

}  // namespace

std::vector<FieldPair> forward_states(const TrackingProblem& prob,
                                      const ControlVector& control) {
  check_problem(prob);
  if (control.steps != prob.steps)
    throw PreconditionError("tracking: control length does not match the horizon");
  Stepper stepper(prob.p, prob.grid, prob.dt);
  std::vector<FieldPair> states;
  states.reserve(prob.steps + 1);
  states.push_back(prob.initial);
  FieldPair s = prob.initial;
  for (int k = 0; k < prob.steps; ++k) {
    stepper.dirichlet_step(s, control.step_values(k));
    states.push_back(s);
  }
  return states;
}

double objective_value(const TrackingProblem& prob, const std::vector<FieldPair>& states) {
  double J = 0;
  for (int k = 1; k <= prob.steps; ++k) J += level_weight(prob, k) * state_misfit(prob, states[k]);
  return J;
}

ControlVector adjoint_gradient(const TrackingProblem& prob, const ControlVector& control,
                               const std::vector<FieldPair>& states) {
  if (states.size() != static_cast<std::size_t>(prob.steps) + 1 ||
      control.steps != prob.steps)
    throw PreconditionError("adjoint: checkpoint mismatch");

  const int n = prob.grid.interior;
  const int last = prob.grid.points() - 1;
  const double h = prob.grid.h;
  const double dt = prob.dt;
  const double mu1 = dt * prob.p.d1 / (h * h);
  const double mu2 = dt * prob.p.d2 / (h * h);
  std::vector<double> off(n - 1, -mu1), diag(n, 1.0 + 2.0 * mu1);
  TridiagonalSolver Au(off, diag, off);
  std::fill(off.begin(), off.end(), -mu2);
  std::fill(diag.begin(), diag.end(), 1.0 + 2.0 * mu2);
  TridiagonalSolver Av(off, diag, off);

  ControlVector grad;
  grad.steps = prob.steps;
  grad.data.assign(4 * static_cast<std::size_t>(prob.steps), 0.0);

  // Interior adjoint at the current level; the solves below pull it back one
  // step at a time through the transposed (symmetric) diffusion operator and
  // the reaction Jacobian at the stored states.
  std::vector<double> lu(n), lv(n);
  {
    const FieldPair& sK = states[prob.steps];
    const double w = 2.0 * h * level_weight(prob, prob.steps);
    for (int i = 1; i <= n; ++i) {
      lu[i - 1] = w * (sK.u[i] - prob.target.u[i]);
      lv[i - 1] = w * (sK.v[i] - prob.target.v[i]);
    }
  }

  for (int k = prob.steps - 1; k >= 0; --k) {
    Au.solve(lu);
    Av.solve(lv);
    const FieldPair& next = states[k + 1];
    const double w_next = 2.0 * h * level_weight(prob, k + 1);
    grad.data[4 * k + 0] = mu1 * lu[0] + 0.5 * w_next * (next.u[0] - prob.target.u[0]);
    grad.data[4 * k + 1] = mu1 * lu[n - 1] + 0.5 * w_next * (next.u[last] - prob.target.u[last]);
    grad.data[4 * k + 2] = mu2 * lv[0] + 0.5 * w_next * (next.v[0] - prob.target.v[0]);
    grad.data[4 * k + 3] = mu2 * lv[n - 1] + 0.5 * w_next * (next.v[last] - prob.target.v[last]);

    if (k == 0) break;
    const FieldPair& cur = states[k];
    const double w_cur = 2.0 * h * level_weight(prob, k);
    for (int i = 1; i <= n; ++i) {
      const double u = cur.u[i], v = cur.v[i];
      const double qu = lu[i - 1], qv = lv[i - 1];
      lu[i - 1] = w_cur * (u - prob.target.u[i]) +
                  (1.0 + dt * (1.0 - 2.0 * u - prob.p.k1 * v)) * qu -
                  dt * prob.p.k2 * v * qv;
      lv[i - 1] = w_cur * (v - prob.target.v[i]) - dt * prob.p.k1 * u * qu +
                  (1.0 + dt * (prob.p.a - 2.0 * v - prob.p.k2 * u)) * qv;
    }
  }
  return grad;
}

double turnpike_metric(const ControlVector& control, const BoundaryValues& reference,
                       double band) {
  if (control.steps == 0) return 0.0;
  int hits = 0;
  for (int k = 0; k < control.steps; ++k) {
    const BoundaryValues b = control.step_values(k);
    if (std::abs(b.u_left - reference.u_left) <= band &&
        std::abs(b.u_right - reference.u_right) <= band &&
        std::abs(b.v_left - reference.v_left) <= band &&
        std::abs(b.v_right - reference.v_right) <= band)
      ++hits;
  }
  return static_cast<double>(hits) / control.steps;
}

namespace {

void project(ControlVector& c, double a) {
  for (int k = 0; k < c.steps; ++k) {
    c.data[4 * k + 0] = std::clamp(c.data[4 * k + 0], 0.0, 1.0);
    c.data[4 * k + 1] = std::clamp(c.data[4 * k + 1], 0.0, 1.0);
    c.data[4 * k + 2] = std::clamp(c.data[4 * k + 2], 0.0, a);
    c.data[4 * k + 3] = std::clamp(c.data[4 * k + 3], 0.0, a);
  }
}

double norm2(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

OptimizationResult solve_tracking(const TrackingProblem& prob, int max_iters,
                                  const ControlVector* initial_guess) {
  check_problem(prob);
  const int last = prob.grid.points() - 1;
  BoundaryValues target_bc{prob.target.u[0], prob.target.u[last], prob.target.v[0],
                           prob.target.v[last]};

  OptimizationResult res;
  res.control = initial_guess ? *initial_guess
                              : ControlVector::constant(prob.steps, target_bc);
  project(res.control, prob.p.a);

  std::vector<FieldPair> states = forward_states(prob, res.control);
  double J = objective_value(prob, states);
  res.objective_history.push_back(J);

  double alpha = 1.0;
  for (int iter = 0; iter < max_iters; ++iter) {
    ControlVector grad = adjoint_gradient(prob, res.control, states);
    const double gnorm = norm2(grad.data);
    res.gradient_norms.push_back(gnorm);
    res.final_gradient_norm = gnorm;
    if (gnorm <= 1e-14) break;

    bool accepted = false;
    bool pinned = false;
    ControlVector trial;
    std::vector<FieldPair> trial_states;
    double J_trial = J;
    for (int backtrack = 0; backtrack < 60; ++backtrack) {
      trial = res.control;
      for (std::size_t i = 0; i < trial.data.size(); ++i)
        trial.data[i] -= alpha * grad.data[i];
      project(trial, prob.p.a);
      double moved = 0;
      for (std::size_t i = 0; i < trial.data.size(); ++i)
        moved = std::max(moved, std::abs(trial.data[i] - res.control.data[i]));
      if (moved == 0.0) {  // every component sits pinned on the box: stationary
        pinned = true;
        break;
      }
      trial_states = forward_states(prob, trial);
      J_trial = objective_value(prob, trial_states);
      if (J_trial < J) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) {
      res.stalled = !pinned && res.gradient_norms.back() > 1e-10;
      break;
    }
    res.control = std::move(trial);
    states = std::move(trial_states);
    J = J_trial;
    res.objective_history.push_back(J);
    res.iterations = iter + 1;
    alpha *= 2.0;
  }

  // Fresh rollout of the returned control; this is the number reported.
  std::vector<FieldPair> verify = forward_states(prob, res.control);
  res.terminal_error = sup_distance(verify.back(), prob.target);
  res.turnpike_fraction = turnpike_metric(res.control, target_bc);
  return res;
}

}  // namespace lvc
