#include "lvc/harness.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "lvc/errors.hpp"
#include "lvc/pde.hpp"

namespace lvc {

BoundaryControl random_admissible_control(double a, double t_end, int switches,
                                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> times(switches);
  std::vector<BoundaryValues> values(switches);
  for (int i = 0; i < switches; ++i) {
    times[i] = t_end * i / switches;
    values[i] = {unit(rng), unit(rng), a * unit(rng), a * unit(rng)};
  }
  return BoundaryControl::piecewise_constant(std::move(times), std::move(values));
}

namespace {

// Runs one controlled simulation, feeding every step's state to `observe`.
template <typename F>
void sweep(const Parameters& p, const Grid& g, const FieldPair& initial,
           const BoundaryControl& control, double t_end, double dt, F&& observe) {
  Stepper stepper(p, g, dt);
  const long steps = std::lround(std::ceil(t_end / dt - 1e-12));
  FieldPair state = initial;
  observe(state);
  for (long k = 0; k < steps; ++k) {
    stepper.dirichlet_step(state, control((k + 1) * dt));
    observe(state);
  }
}

void require_dominates(const std::vector<double>& field, const std::vector<double>& bound,
                       const char* what) {
  for (std::size_t i = 0; i < field.size(); ++i)
    if (field[i] < bound[i])
      throw PreconditionError(std::string("harness: initial ") + what +
                              " does not dominate the barrier");
}

}  // namespace

BarrierReport verify_barrier(const Parameters& p, BarrierSpecies which,
                             const FieldPair& initial, const Grid& g,
                             const BarrierHarnessOptions& opt) {
  const bool want_u = which != BarrierSpecies::v;
  const bool want_v = which != BarrierSpecies::u;

  BarrierProfiles barriers = barrier_profiles(p, g.interior);
  if (want_u && !barriers.eta1)
    throw PreconditionError("harness: the u barrier does not exist for these parameters");
  if (want_v && !barriers.eta2)
    throw PreconditionError("harness: the v barrier does not exist for these parameters");
  if (want_u) require_dominates(initial.u, barriers.eta1->values, "u0");
  if (want_v) require_dominates(initial.v, barriers.eta2->values, "v0");

  BarrierReport report;
  report.min_margin_u = want_u ? 1e300 : 0.0;
  report.min_margin_v = want_v ? 1e300 : 0.0;

  for (int c = 0; c < opt.n_controls; ++c) {
    BoundaryControl control =
        random_admissible_control(p.a, opt.t_end, opt.switches, opt.seed + c);
    double run_min_u = 1e300, run_min_v = 1e300;
    sweep(p, g, initial, control, opt.t_end, opt.dt, [&](const FieldPair& s) {
      if (want_u)
        for (std::size_t i = 0; i < s.u.size(); ++i)
          run_min_u = std::min(run_min_u, s.u[i] - barriers.eta1->values[i]);
      if (want_v)
        for (std::size_t i = 0; i < s.v.size(); ++i)
          run_min_v = std::min(run_min_v, s.v[i] - barriers.eta2->values[i]);
    });
    if (want_u) {
      report.per_control_min_u.push_back(run_min_u);
      report.min_margin_u = std::min(report.min_margin_u, run_min_u);
    }
    if (want_v) {
      report.per_control_min_v.push_back(run_min_v);
      report.min_margin_v = std::min(report.min_margin_v, run_min_v);
    }
  }
  report.pass = (!want_u || report.min_margin_u >= -opt.tol) &&
                (!want_v || report.min_margin_v >= -opt.tol);
  return report;
}

SteadyBarrierReport verify_steady_barrier(const Parameters& p, const FieldPair& initial,
                                          const Grid& g, const BarrierHarnessOptions& opt) {
  CoupledSteadyState steady = solve_coupled_steady(p, g.interior);
  for (std::size_t i = 0; i < initial.u.size(); ++i)
    if (initial.u[i] > steady.u_s[i] || initial.v[i] < steady.v_s[i])
      throw PreconditionError(
          "harness: initial data must satisfy u0 <= u_s and v0 >= v_s");

  SteadyBarrierReport report;
  report.max_excess_u = -1e300;
  report.max_deficit_v = -1e300;
  double min_us = 1e300;
  for (double x : steady.u_s) min_us = std::min(min_us, x);
  report.dist_to_one_bound = 1.0 - min_us;
  report.observed_min_dist_to_one = 1e300;

  for (int c = 0; c < opt.n_controls; ++c) {
    BoundaryControl control =
        random_admissible_control(p.a, opt.t_end, opt.switches, opt.seed + c);
    double run_excess = -1e300, run_deficit = -1e300;
    sweep(p, g, initial, control, opt.t_end, opt.dt, [&](const FieldPair& s) {
      double dist_to_one = 0;
      for (std::size_t i = 0; i < s.u.size(); ++i) {
        run_excess = std::max(run_excess, s.u[i] - steady.u_s[i]);
        run_deficit = std::max(run_deficit, steady.v_s[i] - s.v[i]);
        dist_to_one = std::max(dist_to_one, 1.0 - s.u[i]);
      }
      report.observed_min_dist_to_one =
          std::min(report.observed_min_dist_to_one, dist_to_one);
    });
    report.per_control_max_excess_u.push_back(run_excess);
    report.per_control_max_deficit_v.push_back(run_deficit);
    report.max_excess_u = std::max(report.max_excess_u, run_excess);
    report.max_deficit_v = std::max(report.max_deficit_v, run_deficit);
  }
  report.pass = report.max_excess_u <= opt.tol && report.max_deficit_v <= opt.tol;
  return report;
}

}  // namespace lvc
