#pragma once

#include <optional>
#include <string>

#include "lvc/control.hpp"
#include "lvc/field.hpp"
#include "lvc/grid.hpp"
#include "lvc/model.hpp"
#include "lvc/optimize.hpp"
#include "lvc/pde.hpp"
#include "lvc/wave.hpp"

namespace lvc {

/// Steerable targets.
enum class Target { coexistence, u_only, v_only, extinction, heterogeneous };

const char* to_string(Target t);

/// Constant target state for the three homogeneous single/extinction targets
/// and the coexistence state; heterogeneous targets are profiles and handled
/// separately.
BoundaryValues target_boundary_values(Target t, const Parameters& p);

struct StrategyOutcome {
  Trajectory trajectory;
  BoundaryControl control;
  std::optional<double> phase_switch_time;
  double terminal_error = 0;
};

/// Drives the system with the boundary traces of the matching zero-flux run.
/// The Dirichlet re-simulation with the recorded traces must match the
/// zero-flux trajectory within 1e-6 in sup norm; the returned trajectory is
/// the controlled (Dirichlet) one. The target implied by the regime decides
/// the reported terminal error.
StrategyOutcome neumann_shadow(const FieldPair& initial, const Parameters& p,
                               const Grid& g, const SimulateOptions& opt);

struct StaticControlPlan {
  BoundaryValues values;
  BoundaryControl control;
  bool certified = false;     // the smallness condition on L holds
  std::string clause;         // evaluated certificate or the reason it fails
  double critical_length = 0; // threshold L for the target
};

/// Time-constant control pinned at the target values. Certified when the
/// domain is small enough for the uniqueness-of-steady-state argument:
/// L <= sqrt(d2/a) pi for (1,0), L <= sqrt(d1) pi for (0,a), L <= min of the
/// two for (0,0); L > sqrt(d) pi with a = 1, d1 = d2 for the heterogeneous
/// state. Uncertified plans may still be simulated.
StaticControlPlan static_control(Target target, const Parameters& p);

struct WaveStrategyOutcome {
  StrategyOutcome outcome;
  double shift = 0;                // wave translation chosen at the switch
  double sandwich_violation = 0;   // worst ordering defect along phase 2
};

/// Two-phase strategy towards (u*, v*): static (0, a) until the state sits
/// strictly between the wave's limits, then the translated wave traces at
/// both endpoints. The translation is the largest shift keeping the wave
/// profile below u and above v at the switch time (binary search).
/// Requires a < 1, coexistence, and L <= sqrt(d1) pi.
WaveStrategyOutcome traveling_wave_strategy(const FieldPair& initial, const Parameters& p,
                                            const Grid& g, const TravelingWave& wave,
                                            const SimulateOptions& opt);

struct ReachOutcome {
  StrategyOutcome outcome;  // both phases concatenated
  double t1 = 0;            // switch time
  OptimizationResult optimization;
};

/// Finite-time steering to (u*, v*): zero-flux shadow control until the state
/// is within eps of the target, then terminal-penalty optimal control with
/// horizon T and hard box projection. The terminal error is reported, never
/// claimed exactly zero.
ReachOutcome finite_time_reach(const FieldPair& initial, const Parameters& p,
                               const Grid& g, double horizon, double eps, double dt,
                               double t1_max, int max_iters = 400);

}  // namespace lvc
