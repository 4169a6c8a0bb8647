#pragma once

#include <optional>
#include <vector>

#include "lvc/control.hpp"
#include "lvc/field.hpp"
#include "lvc/grid.hpp"
#include "lvc/model.hpp"
#include "lvc/tridiag.hpp"

namespace lvc {

/// Largest time step for which the explicit reaction update maps the state
/// box into itself: 0.5 / reaction_bound(p).
double max_stable_dt(const Parameters& p);

/// One IMEX step: reaction explicit, diffusion implicit (backward Euler) with
/// a tridiagonal solve per species. Factorizations are built once per
/// (parameters, grid, dt) and reused across steps.
class Stepper {
 public:
  Stepper(const Parameters& p, const Grid& g, double dt);

  /// Dirichlet step: boundary samples are overwritten with bc, the implicit
  /// solve covers interior nodes only. Throws ConvergenceError if the result
  /// leaves the state box by more than 1e-12 (signals dt misuse) and
  /// PreconditionError on inadmissible bc.
  void dirichlet_step(FieldPair& state, const BoundaryValues& bc) const;

  /// Zero-flux step via reflected ghost nodes; boundary samples are unknowns.
  void neumann_step(FieldPair& state) const;

  double dt() const { return dt_; }

 private:
  Parameters p_;
  int n_;
  double dt_;
  double mu1_, mu2_;
  TridiagonalSolver interior_u_, interior_v_;
  TridiagonalSolver full_u_, full_v_;
  mutable std::vector<double> work_u_, work_v_;

  void reaction(const FieldPair& state, std::size_t begin, std::size_t end) const;
  void check_box(const FieldPair& state) const;
};

/// Convenience single step.
FieldPair step(const FieldPair& state, const Parameters& p, const Grid& g,
               const BoundaryValues& bc, double dt);

struct SimulateOptions {
  double t_end = 10.0;
  double dt = 1e-3;
  long max_steps = 0;           // 0: derive the step count from t_end
  int snapshot_stride = 0;      // 0: pick a stride that keeps ~400 snapshots
  double settle_tol = 0.0;      // 0 disables settle detection
  int settle_consecutive = 10;  // required consecutive snapshots inside tol
};

struct Trajectory {
  std::vector<double> times;            // stored snapshot times
  std::vector<FieldPair> snapshots;
  std::vector<double> control_times;    // one entry per step (time the bc applies at)
  std::vector<BoundaryValues> control_record;
  bool settled = false;
  double settle_time = 0.0;

  const FieldPair& final_state() const { return snapshots.back(); }
  double final_time() const { return times.back(); }
};

/// Integrates the controlled system to t_end, or stops early once the
/// sup-norm distance to target stays within settle_tol for
/// settle_consecutive stored snapshots (settle_time is the first of those).
/// The control is evaluated at the end time of each step, which is where the
/// Dirichlet data lands.
Trajectory simulate(const FieldPair& initial, const BoundaryControl& control,
                    const Parameters& p, const Grid& g, const SimulateOptions& opt,
                    const FieldPair* target = nullptr);

/// Same loop under zero-flux conditions; the control record holds the
/// boundary traces of the solution.
Trajectory simulate_neumann(const FieldPair& initial, const Parameters& p, const Grid& g,
                            const SimulateOptions& opt, const FieldPair* target = nullptr);

}  // namespace lvc
