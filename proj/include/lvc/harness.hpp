#pragma once

#include <cstdint>
#include <vector>

#include "lvc/control.hpp"
#include "lvc/elliptic.hpp"
#include "lvc/field.hpp"
#include "lvc/grid.hpp"
#include "lvc/model.hpp"

namespace lvc {

enum class BarrierSpecies { u, v, both };

struct BarrierHarnessOptions {
  int n_controls = 20;
  double t_end = 50.0;
  double dt = 1e-3;
  std::uint64_t seed = 1;
  int switches = 20;   // piecewise-constant control intervals over [0, t_end]
  double tol = 1e-8;   // allowed discrete comparison slack
};

/// Randomized falsification run against the scalar extinction barriers.
struct BarrierReport {
  bool pass = false;
  double min_margin_u = 0;  // min over controls/space/time of u - eta1
  double min_margin_v = 0;  // min of v - eta2
  std::vector<double> per_control_min_u;
  std::vector<double> per_control_min_v;
};

/// Simulates n_controls random admissible boundary controls and records how
/// far the trajectories dip below the barrier profiles. Passes iff every
/// margin stays above -tol. Requires the barrier(s) to exist and the initial
/// data to dominate them pointwise.
BarrierReport verify_barrier(const Parameters& p, BarrierSpecies which,
                             const FieldPair& initial, const Grid& g,
                             const BarrierHarnessOptions& opt);

/// Randomized run against the coupled steady barrier (u <= u_s, v >= v_s).
struct SteadyBarrierReport {
  bool pass = false;
  double max_excess_u = 0;   // max of u - u_s (<= tol to pass)
  double max_deficit_v = 0;  // max of v_s - v
  double dist_to_one_bound = 0;     // 1 - min_x u_s, a priori floor for ||u-1||_inf
  double observed_min_dist_to_one = 0;
  std::vector<double> per_control_max_excess_u;
  std::vector<double> per_control_max_deficit_v;
};

/// Requires the coupled steady state to exist and u0 <= u_s, v0 >= v_s.
SteadyBarrierReport verify_steady_barrier(const Parameters& p, const FieldPair& initial,
                                          const Grid& g, const BarrierHarnessOptions& opt);

/// The harness's random control generator, exposed for the property tests:
/// piecewise-constant with `switches` intervals, values uniform in the box.
BoundaryControl random_admissible_control(double a, double t_end, int switches,
                                          std::uint64_t seed);

}  // namespace lvc
