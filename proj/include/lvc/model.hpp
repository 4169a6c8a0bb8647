#pragma once

#include <string>
#include <vector>

namespace lvc {

/// Model constants of the two-species competition system plus the domain
/// length. u has carrying capacity 1 and intrinsic growth 1; v has both equal
/// to a. Weak competition means 0 < k1, k2 < 1.
struct Parameters {
  double d1;  // diffusion rate of u
  double d2;  // diffusion rate of v
  double a;   // intrinsic growth / carrying capacity of v
  double k1;  // competition pressure of v on u
  double k2;  // competition pressure of u on v
  double L;   // domain length
};

/// Checks d1,d2,a,L > 0 and k1,k2 in (0,1); throws ConfigError naming the
/// violated constraint.
Parameters validate_parameters(double d1, double d2, double a, double k1, double k2,
                               double L);

inline double reaction_u(const Parameters& p, double u, double v) {
  return u * (1.0 - u - p.k1 * v);
}
inline double reaction_v(const Parameters& p, double u, double v) {
  return v * (p.a - v - p.k2 * u);
}

/// Row-sum bound of the reaction Jacobian over the state box [0,1]x[0,a]:
/// max(1 + 2 + k1*a, a + 2a + k2). Controls both the stable explicit time
/// step and the shift used by the monotone elliptic iteration.
double reaction_bound(const Parameters& p);

struct HomogeneousState {
  double u_star;
  double v_star;
};

/// True iff k2 < a < 1/k1, the existence condition for the constant
/// coexistence state.
bool has_coexistence_state(const Parameters& p);

/// ((1-k1*a)/(1-k1*k2), (a-k2)/(1-k1*k2)); requires k2 < a < 1/k1.
HomogeneousState coexistence_state(const Parameters& p);

struct EigenPair {
  double lambda0;           // pi^2 / L^2
  std::vector<double> phi;  // sin(pi x / L) sampled on the grid, endpoints included
};

/// Principal Dirichlet eigenpair of -z'' on (0,L), sampled on a uniform grid
/// with n interior points. Requires L > 0, n >= 3.
EigenPair principal_eigenpair(double L, int n);

enum class Regime { coexistence, u_dominant, v_dominant };

const char* to_string(Regime r);

/// Long-time outcome of the zero-flux dynamics: coexistence when
/// k2 < a < 1/k1, u dominance when k2 > a, v dominance when a > 1/k1.
/// Boundary equalities within tol are rejected as degenerate
/// (PreconditionError).
Regime classify_regime(const Parameters& p, double tol = 1e-12);

}  // namespace lvc
