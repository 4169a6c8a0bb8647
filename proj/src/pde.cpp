#include "lvc/pde.hpp"

#include <cmath>
#include <sstream>

#include "lvc/errors.hpp"

namespace lvc {

double max_stable_dt(const Parameters& p) { return 0.5 / reaction_bound(p); }

namespace {

TridiagonalSolver interior_system(int n, double mu) {
  std::vector<double> off(n - 1, -mu), diag(n, 1.0 + 2.0 * mu);
  return TridiagonalSolver(off, diag, off);
}

TridiagonalSolver neumann_system(int n, double mu) {
  // All n+2 nodes are unknowns; the boundary rows use reflected ghosts.
  const int m = n + 2;
  std::vector<double> lower(m - 1, -mu), diag(m, 1.0 + 2.0 * mu), upper(m - 1, -mu);
  upper.front() = -2.0 * mu;
  lower.back() = -2.0 * mu;
  return TridiagonalSolver(lower, diag, upper);
}

}  // namespace

Stepper::Stepper(const Parameters& p, const Grid& g, double dt)
    : p_(p),
      n_(g.interior),
      dt_(dt),
      mu1_(dt * p.d1 / (g.h * g.h)),
      mu2_(dt * p.d2 / (g.h * g.h)),
      interior_u_(interior_system(g.interior, mu1_)),
      interior_v_(interior_system(g.interior, mu2_)),
      full_u_(neumann_system(g.interior, mu1_)),
      full_v_(neumann_system(g.interior, mu2_)),
      work_u_(g.points()),
      work_v_(g.points()) {
  if (!(dt > 0)) throw PreconditionError("stepper: dt must be > 0");
  if (dt > max_stable_dt(p) * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "stepper: dt=" << dt << " exceeds the stable bound " << max_stable_dt(p);
    throw PreconditionError(msg.str());
  }
}

void Stepper::reaction(const FieldPair& s, std::size_t begin, std::size_t end) const {
  for (std::size_t i = begin; i < end; ++i) {
    const double u = s.u[i], v = s.v[i];
    work_u_[i] = u + dt_ * reaction_u(p_, u, v);
    work_v_[i] = v + dt_ * reaction_v(p_, u, v);
  }
}

void Stepper::check_box(const FieldPair& s) const {
  const double viol = box_violation(s, p_.a);
  if (viol > 1e-12) {
    std::ostringstream msg;
    msg << "state left [0,1]x[0," << p_.a << "] by " << viol
        << "; dt or boundary data are out of contract";
    throw ConvergenceError(msg.str());
  }
}

void Stepper::dirichlet_step(FieldPair& state, const BoundaryValues& bc) const {
  if (!admissible(bc, p_.a))
    throw PreconditionError("dirichlet step: boundary values outside [0,1]x[0,a]");
  const std::size_t last = static_cast<std::size_t>(n_) + 1;
  reaction(state, 1, last);
  work_u_[1] += mu1_ * bc.u_left;
  work_u_[n_] += mu1_ * bc.u_right;
  work_v_[1] += mu2_ * bc.v_left;
  work_v_[n_] += mu2_ * bc.v_right;
  interior_u_.solve(std::span<double>(work_u_.data() + 1, n_));
  interior_v_.solve(std::span<double>(work_v_.data() + 1, n_));
  for (int i = 1; i <= n_; ++i) {
    state.u[i] = work_u_[i];
    state.v[i] = work_v_[i];
  }
  state.u.front() = bc.u_left;
  state.u.back() = bc.u_right;
  state.v.front() = bc.v_left;
  state.v.back() = bc.v_right;
  check_box(state);
}

void Stepper::neumann_step(FieldPair& state) const {
  reaction(state, 0, state.size());
  full_u_.solve(work_u_);
  full_v_.solve(work_v_);
  state.u = work_u_;
  state.v = work_v_;
  check_box(state);
}

FieldPair step(const FieldPair& state, const Parameters& p, const Grid& g,
               const BoundaryValues& bc, double dt) {
  Stepper stepper(p, g, dt);
  FieldPair next = state;
  stepper.dirichlet_step(next, bc);
  return next;
}

namespace {

Trajectory run_loop(const FieldPair& initial, const BoundaryControl* control,
                    const Parameters& p, const Grid& g, const SimulateOptions& opt,
                    const FieldPair* target) {
  if (initial.u.size() != static_cast<std::size_t>(g.points()))
    throw PreconditionError("simulate: initial data does not match the grid");
  if (box_violation(initial, p.a) > 0)
    throw PreconditionError("simulate: initial data outside [0,1]x[0,a]");
  if (!(opt.t_end > 0) && opt.max_steps <= 0)
    throw PreconditionError("simulate: t_end must be > 0");

  const long steps = opt.max_steps > 0
                         ? opt.max_steps
                         : std::lround(std::ceil(opt.t_end / opt.dt - 1e-12));
  int stride = opt.snapshot_stride;
  if (stride <= 0) stride = std::max(1L, steps / 400);

  Stepper stepper(p, g, opt.dt);
  Trajectory traj;
  traj.times.reserve(steps / stride + 2);
  traj.control_times.reserve(steps);

  FieldPair state = initial;
  traj.times.push_back(0.0);
  traj.snapshots.push_back(state);

  int inside = (target && sup_distance(state, *target) <= opt.settle_tol) ? 1 : 0;
  double first_inside_time = 0.0;

  for (long k = 0; k < steps; ++k) {
    const double t_next = (k + 1) * opt.dt;
    if (control) {
      const BoundaryValues bc = (*control)(t_next);
      if (!admissible(bc, p.a))
        throw PreconditionError("simulate: control emitted inadmissible boundary values");
      stepper.dirichlet_step(state, bc);
      traj.control_times.push_back(t_next);
      traj.control_record.push_back(bc);
    } else {
      stepper.neumann_step(state);
      traj.control_times.push_back(t_next);
      traj.control_record.push_back(BoundaryValues{state.u.front(), state.u.back(),
                                                   state.v.front(), state.v.back()});
    }

    const bool store = ((k + 1) % stride == 0) || (k + 1 == steps);
    if (!store) continue;
    traj.times.push_back(t_next);
    traj.snapshots.push_back(state);

    if (target && opt.settle_tol > 0) {
      if (sup_distance(state, *target) <= opt.settle_tol) {
        if (inside == 0) first_inside_time = t_next;
        ++inside;
        if (inside >= opt.settle_consecutive) {
          traj.settled = true;
          traj.settle_time = first_inside_time;
          break;
        }
      } else {
        inside = 0;
      }
    }
  }
  return traj;
}

}  // namespace

Trajectory simulate(const FieldPair& initial, const BoundaryControl& control,
                    const Parameters& p, const Grid& g, const SimulateOptions& opt,
                    const FieldPair* target) {
  return run_loop(initial, &control, p, g, opt, target);
}

Trajectory simulate_neumann(const FieldPair& initial, const Parameters& p, const Grid& g,
                            const SimulateOptions& opt, const FieldPair* target) {
  return run_loop(initial, nullptr, p, g, opt, target);
}

}  // namespace lvc
