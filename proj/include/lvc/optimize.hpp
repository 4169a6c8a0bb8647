#pragma once

#include <vector>

#include "lvc/control.hpp"
#include "lvc/field.hpp"
#include "lvc/grid.hpp"
#include "lvc/model.hpp"

namespace lvc {

/// Piecewise-constant boundary control, one quadruple per time step, stored
/// flat as (uL, uR, vL, vR) * steps.
struct ControlVector {
  int steps = 0;
  std::vector<double> data;

  static ControlVector constant(int steps, const BoundaryValues& values);

  double& at(int step, int component) { return data[4 * step + component]; }
  double at(int step, int component) const { return data[4 * step + component]; }
  BoundaryValues step_values(int step) const;
  BoundaryControl as_control(double dt) const;
};

/// Direct transcription of the boundary tracking problem on the exact IMEX
/// scheme: J = w_terminal * ||y(T) - target||^2 + w_running * sum_k dt *
/// ||y(t_k) - target||^2, with trapezoid-weighted discrete L2 norms in space.
struct TrackingProblem {
  Parameters p;
  Grid grid;
  FieldPair initial;
  FieldPair target;
  double dt = 1e-3;
  int steps = 0;
  double w_terminal = 1.0;
  double w_running = 0.0;
};

/// All steps+1 states of the forward scheme (full trajectory checkpointing).
std::vector<FieldPair> forward_states(const TrackingProblem& prob,
                                      const ControlVector& control);

double objective_value(const TrackingProblem& prob, const std::vector<FieldPair>& states);

/// Exact gradient of the discretized objective: backward sweep with
/// transposed tridiagonal solves and reaction Jacobians at the stored states.
ControlVector adjoint_gradient(const TrackingProblem& prob, const ControlVector& control,
                               const std::vector<FieldPair>& states);

struct OptimizationResult {
  ControlVector control;
  std::vector<double> objective_history;  // accepted iterates, non-increasing
  std::vector<double> gradient_norms;
  double final_gradient_norm = 0;
  double terminal_error = 0;      // sup norm at T, from forward re-simulation
  double turnpike_fraction = 0;   // fraction of steps with all controls within
                                  // 0.05 of the target boundary values
  bool stalled = false;           // line search ran out of backtracks
  int iterations = 0;
};

/// Projected gradient with backtracking line search on the box
/// [0,1]^2 x [0,a]^2 per step. Starts from `initial_guess` when given,
/// otherwise from the target boundary values held constant.
OptimizationResult solve_tracking(const TrackingProblem& prob, int max_iters,
                                  const ControlVector* initial_guess = nullptr);

/// Fraction of steps whose four control values all lie within `band` of the
/// reference boundary values.
double turnpike_metric(const ControlVector& control, const BoundaryValues& reference,
                       double band = 0.05);

}  // namespace lvc
