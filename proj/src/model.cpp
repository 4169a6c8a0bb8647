#include "lvc/model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "lvc/errors.hpp"
#include "lvc/grid.hpp"

namespace lvc {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError("invalid parameters: " + what);
}

}  // namespace

Parameters validate_parameters(double d1, double d2, double a, double k1, double k2,
                               double L) {
  require(std::isfinite(d1) && d1 > 0, "d1 must be > 0");
  require(std::isfinite(d2) && d2 > 0, "d2 must be > 0");
  require(std::isfinite(a) && a > 0, "a must be > 0");
  require(std::isfinite(k1) && k1 > 0 && k1 < 1,
          "k1 outside (0,1) violates weak competition");
  require(std::isfinite(k2) && k2 > 0 && k2 < 1,
          "k2 outside (0,1) violates weak competition");
  require(std::isfinite(L) && L > 0, "L must be > 0");
  return Parameters{d1, d2, a, k1, k2, L};
}

double reaction_bound(const Parameters& p) {
  return std::max(1.0 + 2.0 + p.k1 * p.a, p.a + 2.0 * p.a + p.k2);
}

bool has_coexistence_state(const Parameters& p) {
  return p.k2 < p.a && p.a * p.k1 < 1.0;
}

HomogeneousState coexistence_state(const Parameters& p) {
  if (!has_coexistence_state(p))
    throw PreconditionError("coexistence state requires k2 < a < 1/k1");
  const double denom = 1.0 - p.k1 * p.k2;
  return {(1.0 - p.k1 * p.a) / denom, (p.a - p.k2) / denom};
}

EigenPair principal_eigenpair(double L, int n) {
  if (!(L > 0)) throw PreconditionError("eigenpair requires L > 0");
  if (n < 3) throw PreconditionError("eigenpair requires n >= 3");
  Grid g(L, n);
  EigenPair e;
  e.lambda0 = std::numbers::pi * std::numbers::pi / (L * L);
  e.phi.resize(g.points());
  for (int i = 0; i < g.points(); ++i) e.phi[i] = std::sin(std::numbers::pi * g.x[i] / L);
  e.phi.front() = 0.0;
  e.phi.back() = 0.0;
  return e;
}

const char* to_string(Regime r) {
  switch (r) {
    case Regime::coexistence: return "coexistence";
    case Regime::u_dominant: return "u_dominant";
    case Regime::v_dominant: return "v_dominant";
  }
  return "?";
}

Regime classify_regime(const Parameters& p, double tol) {
  if (std::abs(p.k2 - p.a) < tol || std::abs(p.a * p.k1 - 1.0) < tol) {
    std::ostringstream msg;
    msg << "degenerate regime: k2=" << p.k2 << ", a=" << p.a << ", a*k1=" << p.a * p.k1;
    throw PreconditionError(msg.str());
  }
  if (p.k2 > p.a) return Regime::u_dominant;
  if (p.a * p.k1 > 1.0) return Regime::v_dominant;
  return Regime::coexistence;
}

}  // namespace lvc
