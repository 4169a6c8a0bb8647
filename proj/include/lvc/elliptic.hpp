#pragma once

#include <optional>
#include <vector>

#include "lvc/grid.hpp"
#include "lvc/model.hpp"

namespace lvc {

enum class ProfileKind { theta, eta1, eta2, phi, generic };

/// Sampled solution of a scalar elliptic problem, endpoints included.
struct Profile {
  std::vector<double> values;
  ProfileKind kind = ProfileKind::generic;
  double residual_norm = 0;
};

/// Positive solution of d z'' + z (alpha - beta z) = 0 on (0,L) with zero
/// Dirichlet data, by damped Newton on the central-difference system from the
/// initial guess (alpha/beta) sin(pi x / L). Exists iff alpha/d > pi^2/L^2;
/// the threshold case is rejected. Residual (sup norm) <= 1e-10 on success.
Profile solve_logistic_bvp(double d, double alpha, double beta, double L, int n,
                           ProfileKind kind = ProfileKind::generic);

struct BarrierProfiles {
  std::optional<Profile> eta1;  // blocks u from extinction
  std::optional<Profile> eta2;  // blocks v from extinction
  std::optional<double> critical_length_u;  // L above which eta1 exists
  std::optional<double> critical_length_v;
};

/// eta1 solves d1 z'' + z(1 - k1 a - z) = 0 and exists iff a < 1/k1 and
/// L > pi sqrt(d1/(1-a k1)); eta2 likewise with (d2, a - k2). Absence is not
/// an error.
BarrierProfiles barrier_profiles(const Parameters& p, int n);

/// Nontrivial steady state with boundary data u=1, v=0, bracketed between the
/// explicit sub/super pairs. u_s is the maximal-u limit (descending from 1),
/// v_s the matching minimal-v limit; pair_gap measures how far the opposite
/// limit pair sits (0 when the solution is unique).
struct CoupledSteadyState {
  std::vector<double> u_s;
  std::vector<double> v_s;
  std::vector<double> lower_u;  // eta * phi
  std::vector<double> lower_v;  // delta * phi
  double eta = 0;               // 1 - k1 a - d1 pi^2/L^2
  double delta = 0;             // a - k2 - d2 pi^2/L^2
  double pair_gap = 0;
  double residual_norm = 0;
  int sweeps = 0;
};

/// Monotone (shifted Picard) iteration in the mixed quasimonotone order from
/// (1, delta*phi) / (eta*phi, a), shift K = reaction_bound(p), swept until the
/// successive change is <= 1e-10, then polished by Newton so the profiles are
/// exact fixed points of the discrete dynamics. Requires k2 < a < 1/k1 and
/// eta, delta > 0.
CoupledSteadyState solve_coupled_steady(const Parameters& p, int n);

/// The zero-boundary coexistence profile pair (scaled copies of theta) for
/// a = 1, d1 = d2 = d, L > sqrt(d) pi.
struct HeterogeneousState {
  Profile u;  // (1-k1)/(1-k1 k2) * theta
  Profile v;  // (1-k2)/(1-k1 k2) * theta
};

HeterogeneousState heterogeneous_coexistence(const Parameters& p, int n);

}  // namespace lvc
