#include "lvc/wave.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "lvc/errors.hpp"
#include "lvc/tridiag.hpp"

namespace lvc {

namespace {

double sup_norm(const std::vector<double>& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

struct WaveSystem {
  const Parameters& p;
  double c, h, ih2, ic2h;
  int m;  // interior nodes

  double fu(const std::vector<double>& U, const std::vector<double>& V, int i) const {
    return p.d1 * (U[i - 1] - 2.0 * U[i] + U[i + 1]) * ih2 -
           c * (U[i + 1] - U[i - 1]) * ic2h + reaction_u(p, U[i], V[i]);
  }
  double fv(const std::vector<double>& U, const std::vector<double>& V, int i) const {
    return p.d2 * (V[i - 1] - 2.0 * V[i] + V[i + 1]) * ih2 -
           c * (V[i + 1] - V[i - 1]) * ic2h + reaction_v(p, U[i], V[i]);
  }

  void residual(const std::vector<double>& U, const std::vector<double>& V,
                std::vector<double>& r) const {
    r.resize(2 * m);
    for (int i = 1; i <= m; ++i) {
      r[2 * (i - 1)] = fu(U, V, i);
      r[2 * (i - 1) + 1] = fv(U, V, i);
    }
  }
};

}  // namespace

double min_wave_speed(const Parameters& p) {
  if (!has_coexistence_state(p) || !(p.a < 1.0))
    throw PreconditionError("wave speed threshold requires a < 1 and k2 < a < 1/k1");
  return 2.0 * std::sqrt((1.0 - p.a * p.k1) / (1.0 - p.k1 * p.k2));
}

double TravelingWave::eval_u(double at) const {
  if (at <= xi.front()) return 0.0;
  if (at >= xi.back()) return u_star;
  const double h = (xi.back() - xi.front()) / (xi.size() - 1);
  const std::size_t i = std::min<std::size_t>(
      static_cast<std::size_t>((at - xi.front()) / h), xi.size() - 2);
  const double w = (at - xi[i]) / h;
  return U[i] + w * (U[i + 1] - U[i]);
}

double TravelingWave::eval_v(double at) const {
  if (at <= xi.front()) return a;
  if (at >= xi.back()) return v_star;
  const double h = (xi.back() - xi.front()) / (xi.size() - 1);
  const std::size_t i = std::min<std::size_t>(
      static_cast<std::size_t>((at - xi.front()) / h), xi.size() - 2);
  const double w = (at - xi[i]) / h;
  return V[i] + w * (V[i + 1] - V[i]);
}

TravelingWave traveling_wave_profile(const Parameters& p, double c, double half_width,
                                     int m) {
  const double c_min = min_wave_speed(p);
  if (!(c > c_min))
    throw PreconditionError("wave speed must exceed the threshold " + std::to_string(c_min));
  if (!(half_width > 0) || m < 11)
    throw PreconditionError("wave profile: need half_width > 0 and m >= 11");

  const HomogeneousState star = coexistence_state(p);
  const double X = half_width;
  const double h = 2.0 * X / (m + 1);

  WaveSystem sys{p, c, h, 1.0 / (h * h), 1.0 / (2.0 * h), m};

  std::vector<double> xi(m + 2);
  for (int i = 0; i <= m + 1; ++i) xi[i] = -X + i * h;

  // Sigmoid seed between the clamped limit states.
  std::vector<double> U(m + 2), V(m + 2);
  const double width = 2.0;
  for (int i = 0; i <= m + 1; ++i) {
    const double s = 1.0 / (1.0 + std::exp(-xi[i] / width));
    U[i] = star.u_star * s;
    V[i] = p.a + (star.v_star - p.a) * s;
  }
  U.front() = 0.0;
  V.front() = p.a;
  U.back() = star.u_star;
  V.back() = star.v_star;

  std::vector<double> F, F_trial;
  sys.residual(U, V, F);
  double fnorm = sup_norm(F);

  std::vector<double> U_trial = U, V_trial = V;
  const Mat2 sub_block{p.d1 * sys.ih2 + c * sys.ic2h, 0, 0, p.d2 * sys.ih2 + c * sys.ic2h};
  const Mat2 sup_block{p.d1 * sys.ih2 - c * sys.ic2h, 0, 0, p.d2 * sys.ih2 - c * sys.ic2h};

  bool converged = false;
  for (int iter = 0; iter < 120 && !converged; ++iter) {
    if (fnorm <= 1e-12) {
      converged = true;
      break;
    }
    std::vector<Mat2> sub(m - 1, sub_block), sup(m - 1, sup_block), diag(m);
    for (int i = 1; i <= m; ++i)
      diag[i - 1] = {-2.0 * p.d1 * sys.ih2 + 1.0 - 2.0 * U[i] - p.k1 * V[i], -p.k1 * U[i],
                     -p.k2 * V[i], -2.0 * p.d2 * sys.ih2 + p.a - 2.0 * V[i] - p.k2 * U[i]};

    std::vector<double> delta(2 * m);
    for (int i = 0; i < 2 * m; ++i) delta[i] = -F[i];
    solve_block_tridiagonal(sub, diag, sup, delta);

    double lambda = 1.0;
    double trial_norm = fnorm;
    for (int halving = 0; halving < 50; ++halving) {
      for (int i = 1; i <= m; ++i) {
        U_trial[i] = U[i] + lambda * delta[2 * (i - 1)];
        V_trial[i] = V[i] + lambda * delta[2 * (i - 1) + 1];
      }
      sys.residual(U_trial, V_trial, F_trial);
      trial_norm = sup_norm(F_trial);
      if (trial_norm < fnorm) break;
      lambda *= 0.5;
    }
    if (trial_norm >= fnorm) {
      if (fnorm <= 1e-8) {
        converged = true;
        break;
      }
      throw ConvergenceError("wave profile: Newton stalled at residual " +
                             std::to_string(fnorm));
    }
    U.swap(U_trial);
    V.swap(V_trial);
    F.swap(F_trial);
    fnorm = trial_norm;
  }
  if (!converged && fnorm > 1e-8)
    throw ConvergenceError("wave profile: Newton did not converge, residual " +
                           std::to_string(fnorm));

  double defect = 0.0;
  for (int i = 0; i <= m; ++i) {
    defect = std::max(defect, U[i] - U[i + 1]);   // U must not decrease
    defect = std::max(defect, V[i + 1] - V[i]);   // V must not increase
  }
  if (defect > 1e-8)
    throw ConvergenceError(
        "wave profile: monotonicity violated by " + std::to_string(defect) +
        "; enlarge the window or pick a speed farther from the threshold");

  // Pin the phase: translate the sample locations so that U(0) = u*/2 exactly
  // (on the linear interpolant). The clamped solve fixes an arbitrary nearby
  // translate; the wave itself is translation-invariant.
  const double u_half = 0.5 * star.u_star;
  if (U[1] > u_half || U[m] < u_half)
    throw ConvergenceError("wave profile: window too small to pin the phase");
  std::size_t j = 1;
  while (U[j + 1] < u_half) ++j;
  const double frac = (u_half - U[j]) / (U[j + 1] - U[j]);
  const double tau = xi[j] + frac * h;
  for (double& x : xi) x -= tau;

  TravelingWave w;
  w.c = c;
  w.half_width = X;
  w.residual_norm = fnorm;
  w.tail_error = std::max({std::abs(U.front()), std::abs(V.front() - p.a),
                           std::abs(U.back() - star.u_star),
                           std::abs(V.back() - star.v_star)});
  w.truncation_gap = std::max({std::abs(U[1]), std::abs(V[1] - p.a),
                               std::abs(U[m] - star.u_star),
                               std::abs(V[m] - star.v_star)});
  w.u_star = star.u_star;
  w.v_star = star.v_star;
  w.a = p.a;
  w.xi = std::move(xi);
  w.U = std::move(U);
  w.V = std::move(V);
  return w;
}

}  // namespace lvc
