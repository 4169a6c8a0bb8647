#include "lvc/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "lvc/errors.hpp"
#include "lvc/tridiag.hpp"

namespace lvc {

namespace {

constexpr double kPi = std::numbers::pi;

double sup_norm(const std::vector<double>& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// Residual of d z'' + z (alpha - beta z) at the interior nodes.
void logistic_residual(double d, double alpha, double beta, double h,
                       const std::vector<double>& z, std::vector<double>& out) {
  const int n = static_cast<int>(z.size()) - 2;
  const double ih2 = 1.0 / (h * h);
  out.resize(n);
  for (int i = 1; i <= n; ++i) {
    const double lap = (z[i - 1] - 2.0 * z[i] + z[i + 1]) * ih2;
    out[i - 1] = d * lap + z[i] * (alpha - beta * z[i]);
  }
}

}  // namespace

Profile solve_logistic_bvp(double d, double alpha, double beta, double L, int n,
                           ProfileKind kind) {
  if (!(d > 0) || !(beta > 0) || !(L > 0) || n < 3)
    throw PreconditionError("logistic bvp: need d > 0, beta > 0, L > 0, n >= 3");
  const double lambda0 = kPi * kPi / (L * L);
  if (!(alpha / d > lambda0)) {
    std::ostringstream msg;
    msg << "logistic bvp: no positive solution, alpha/d = " << alpha / d
        << " must exceed pi^2/L^2 = " << lambda0;
    throw PreconditionError(msg.str());
  }

  Grid g(L, n);
  const double h = g.h;
  const double ih2 = 1.0 / (h * h);

  // Initial guess (alpha/beta) sin(pi x / L): right sign, right boundary values.
  std::vector<double> z(g.points());
  for (int i = 0; i < g.points(); ++i)
    z[i] = (alpha / beta) * std::sin(kPi * g.x[i] / L);
  z.front() = z.back() = 0.0;

  std::vector<double> F, F_trial, delta(n), lower(n - 1), diag(n), upper(n - 1);
  logistic_residual(d, alpha, beta, h, z, F);
  double fnorm = sup_norm(F);

  std::vector<double> z_trial = z;
  bool converged = false;
  for (int iter = 0; iter < 80 && !converged; ++iter) {
    if (fnorm <= 1e-13) {
      converged = true;
      break;
    }
    for (int i = 0; i < n; ++i) diag[i] = -2.0 * d * ih2 + alpha - 2.0 * beta * z[i + 1];
    std::fill(lower.begin(), lower.end(), d * ih2);
    std::fill(upper.begin(), upper.end(), d * ih2);
    for (int i = 0; i < n; ++i) delta[i] = -F[i];
    TridiagonalSolver J(lower, diag, upper);
    J.solve(delta);

    // Damped update: halve until the residual decreases.
    double lambda = 1.0;
    double trial_norm = fnorm;
    for (int halving = 0; halving < 50; ++halving) {
      for (int i = 0; i < n; ++i) z_trial[i + 1] = z[i + 1] + lambda * delta[i];
      logistic_residual(d, alpha, beta, h, z_trial, F_trial);
      trial_norm = sup_norm(F_trial);
      if (trial_norm < fnorm) break;
      lambda *= 0.5;
    }
    if (trial_norm >= fnorm) {
      // roundoff floor reached; fine as long as the contract holds
      if (fnorm <= 1e-10) {
        converged = true;
        break;
      }
      throw ConvergenceError("logistic bvp: Newton stalled at residual " +
                             std::to_string(fnorm));
    }
    z.swap(z_trial);
    F.swap(F_trial);
    fnorm = trial_norm;
  }
  if (!converged && fnorm > 1e-10)
    throw ConvergenceError("logistic bvp: Newton did not reach tolerance, residual " +
                           std::to_string(fnorm));

  for (int i = 1; i <= n; ++i)
    if (!(z[i] > 0))
      throw ConvergenceError("logistic bvp: converged to a non-positive profile");

  Profile prof;
  prof.values = std::move(z);
  prof.kind = kind;
  prof.residual_norm = fnorm;
  return prof;
}

BarrierProfiles barrier_profiles(const Parameters& p, int n) {
  BarrierProfiles out;
  const double lambda0 = kPi * kPi / (p.L * p.L);
  const double alpha_u = 1.0 - p.k1 * p.a;
  const double alpha_v = p.a - p.k2;
  if (alpha_u > 0) {
    out.critical_length_u = kPi * std::sqrt(p.d1 / alpha_u);
    if (alpha_u / p.d1 > lambda0)
      out.eta1 = solve_logistic_bvp(p.d1, alpha_u, 1.0, p.L, n, ProfileKind::eta1);
  }
  if (alpha_v > 0) {
    out.critical_length_v = kPi * std::sqrt(p.d2 / alpha_v);
    if (alpha_v / p.d2 > lambda0)
      out.eta2 = solve_logistic_bvp(p.d2, alpha_v, 1.0, p.L, n, ProfileKind::eta2);
  }
  return out;
}

namespace {

// One shifted sweep of the monotone scheme: solves
// (-d z'' + K z) = K z_prev + f(z_prev, w_prev) with Dirichlet data `bc`.
class SweepSolver {
 public:
  SweepSolver(double d, double K, const Grid& g)
      : n_(g.interior), ih2_(1.0 / (g.h * g.h)), d_(d), K_(K),
        solver_(make(d, K, g)) {}

  void apply(const std::vector<double>& rhs_interior, double bc_left, double bc_right,
             std::vector<double>& out) const {
    std::vector<double> rhs = rhs_interior;
    rhs[0] += d_ * ih2_ * bc_left;
    rhs[n_ - 1] += d_ * ih2_ * bc_right;
    solver_.solve(rhs);
    out[0] = bc_left;
    for (int i = 0; i < n_; ++i) out[i + 1] = rhs[i];
    out[n_ + 1] = bc_right;
  }

 private:
  static TridiagonalSolver make(double d, double K, const Grid& g) {
    const double ih2 = 1.0 / (g.h * g.h);
    const int n = g.interior;
    std::vector<double> off(n - 1, -d * ih2), diag(n, 2.0 * d * ih2 + K);
    return TridiagonalSolver(off, diag, off);
  }

  int n_;
  double ih2_, d_, K_;
  TridiagonalSolver solver_;
};

void assert_ordered(const std::vector<double>& lo, const std::vector<double>& hi,
                    const char* what) {
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i] + 1e-12)
      throw ConvergenceError(std::string("monotone iteration lost ordering: ") + what);
}

double sup_diff(const std::vector<double>& x, const std::vector<double>& y) {
  double m = 0;
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

// Newton polish of the coupled steady system so the returned profiles are
// fixed points of the discrete dynamics to machine precision.
double polish_coupled(const Parameters& p, const Grid& g, std::vector<double>& u,
                      std::vector<double>& v) {
  const int n = g.interior;
  const double ih2 = 1.0 / (g.h * g.h);
  auto residual = [&](const std::vector<double>& uu, const std::vector<double>& vv,
                      std::vector<double>& r) {
    r.resize(2 * n);
    for (int i = 1; i <= n; ++i) {
      const double lap_u = (uu[i - 1] - 2.0 * uu[i] + uu[i + 1]) * ih2;
      const double lap_v = (vv[i - 1] - 2.0 * vv[i] + vv[i + 1]) * ih2;
      r[2 * (i - 1)] = p.d1 * lap_u + reaction_u(p, uu[i], vv[i]);
      r[2 * (i - 1) + 1] = p.d2 * lap_v + reaction_v(p, uu[i], vv[i]);
    }
  };

  std::vector<double> r;
  residual(u, v, r);
  double fnorm = sup_norm(r);
  for (int iter = 0; iter < 8 && fnorm > 1e-13; ++iter) {
    std::vector<Mat2> sub(n - 1, {p.d1 * ih2, 0, 0, p.d2 * ih2});
    std::vector<Mat2> sup(n - 1, {p.d1 * ih2, 0, 0, p.d2 * ih2});
    std::vector<Mat2> diag(n);
    for (int i = 1; i <= n; ++i)
      diag[i - 1] = {-2.0 * p.d1 * ih2 + 1.0 - 2.0 * u[i] - p.k1 * v[i], -p.k1 * u[i],
                     -p.k2 * v[i], -2.0 * p.d2 * ih2 + p.a - 2.0 * v[i] - p.k2 * u[i]};
    for (double& x : r) x = -x;
    solve_block_tridiagonal(sub, diag, sup, r);
    for (int i = 1; i <= n; ++i) {
      u[i] += r[2 * (i - 1)];
      v[i] += r[2 * (i - 1) + 1];
    }
    residual(u, v, r);
    fnorm = sup_norm(r);
  }
  return fnorm;
}

}  // namespace

CoupledSteadyState solve_coupled_steady(const Parameters& p, int n) {
  if (!has_coexistence_state(p))
    throw PreconditionError("coupled steady state requires k2 < a < 1/k1");
  const double lambda0 = kPi * kPi / (p.L * p.L);
  const double eta = 1.0 - p.k1 * p.a - p.d1 * lambda0;
  const double delta = p.a - p.k2 - p.d2 * lambda0;
  if (!(eta > 0) || !(delta > 0)) {
    std::ostringstream msg;
    msg << "coupled steady state requires L > max(" << kPi * std::sqrt(p.d1 / (1 - p.k1 * p.a))
        << ", " << kPi * std::sqrt(p.d2 / (p.a - p.k2)) << "); got L = " << p.L;
    throw PreconditionError(msg.str());
  }

  Grid g(p.L, n);
  EigenPair eig = principal_eigenpair(p.L, n);
  const double K = reaction_bound(p);

  CoupledSteadyState out;
  out.eta = eta;
  out.delta = delta;
  out.lower_u.resize(g.points());
  out.lower_v.resize(g.points());
  for (int i = 0; i < g.points(); ++i) {
    out.lower_u[i] = eta * eig.phi[i];
    out.lower_v[i] = delta * eig.phi[i];
  }

  // Mixed quasimonotone sweeps: the upper u pairs with the lower v and vice
  // versa. Upper sequences descend, lower ones ascend.
  std::vector<double> u_hi(g.points(), 1.0);
  std::vector<double> v_hi(g.points(), p.a);
  v_hi.front() = v_hi.back() = 0.0;
  std::vector<double> u_lo = out.lower_u;
  std::vector<double> v_lo = out.lower_v;

  SweepSolver sweep_u(p.d1, K, g);
  SweepSolver sweep_v(p.d2, K, g);

  std::vector<double> rhs(n), next(g.points());
  auto advance = [&](const std::vector<double>& self, const std::vector<double>& other,
                     bool u_species, std::vector<double>& into) {
    for (int i = 1; i <= n; ++i)
      rhs[i - 1] = K * self[i] + (u_species ? reaction_u(p, self[i], other[i])
                                            : reaction_v(p, other[i], self[i]));
    if (u_species)
      sweep_u.apply(rhs, 1.0, 1.0, into);
    else
      sweep_v.apply(rhs, 0.0, 0.0, into);
  };

  double change = 1.0;
  int sweeps = 0;
  while (change > 1e-10) {
    if (++sweeps > 20000)
      throw ConvergenceError("coupled steady state: monotone iteration stagnated");
    change = 0.0;

    advance(u_hi, v_lo, true, next);
    assert_ordered(next, u_hi, "upper u must descend");
    change = std::max(change, sup_diff(next, u_hi));
    std::swap(u_hi, next);

    advance(u_lo, v_hi, true, next);
    assert_ordered(u_lo, next, "lower u must ascend");
    change = std::max(change, sup_diff(next, u_lo));
    std::swap(u_lo, next);

    advance(v_hi, u_lo, false, next);
    assert_ordered(next, v_hi, "upper v must descend");
    change = std::max(change, sup_diff(next, v_hi));
    std::swap(v_hi, next);

    advance(v_lo, u_hi, false, next);
    assert_ordered(v_lo, next, "lower v must ascend");
    change = std::max(change, sup_diff(next, v_lo));
    std::swap(v_lo, next);

    assert_ordered(u_lo, u_hi, "u bounds crossed");
    assert_ordered(v_lo, v_hi, "v bounds crossed");
  }
  out.sweeps = sweeps;
  out.pair_gap = std::max(sup_diff(u_hi, u_lo), sup_diff(v_hi, v_lo));

  // Canonical barrier pair: maximal u with the matching minimal v, i.e. the
  // limits of the sequences seeded at u = 1 and v = delta*phi.
  out.u_s = u_hi;
  out.v_s = v_lo;
  out.residual_norm = polish_coupled(p, g, out.u_s, out.v_s);

  for (int i = 0; i < g.points(); ++i) {
    if (out.u_s[i] < out.lower_u[i] - 1e-9 || out.u_s[i] > 1.0 + 1e-9 ||
        out.v_s[i] < out.lower_v[i] - 1e-9 || out.v_s[i] > p.a + 1e-9)
      throw ConvergenceError("coupled steady state: sandwich bounds violated");
  }
  return out;
}

HeterogeneousState heterogeneous_coexistence(const Parameters& p, int n) {
  if (std::abs(p.a - 1.0) > 1e-12)
    throw PreconditionError("heterogeneous state requires a = 1");
  if (std::abs(p.d1 - p.d2) > 1e-12 * std::max(p.d1, p.d2))
    throw PreconditionError("heterogeneous state requires d1 = d2");
  const double d = p.d1;
  const double lambda0 = kPi * kPi / (p.L * p.L);
  if (!(1.0 / d > lambda0))
    throw PreconditionError("heterogeneous state requires L > sqrt(d) pi");

  Profile theta = solve_logistic_bvp(d, 1.0, 1.0, p.L, n, ProfileKind::theta);
  const double denom = 1.0 - p.k1 * p.k2;
  HeterogeneousState out;
  out.u.kind = ProfileKind::generic;
  out.v.kind = ProfileKind::generic;
  out.u.values.resize(theta.values.size());
  out.v.values.resize(theta.values.size());
  const double cu = (1.0 - p.k1) / denom;
  const double cv = (1.0 - p.k2) / denom;
  for (std::size_t i = 0; i < theta.values.size(); ++i) {
    out.u.values[i] = cu * theta.values[i];
    out.v.values[i] = cv * theta.values[i];
  }
  out.u.residual_norm = cu * theta.residual_norm;
  out.v.residual_norm = cv * theta.residual_norm;
  return out;
}

}  // namespace lvc
