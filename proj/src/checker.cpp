#include "lvc/checker.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "lvc/errors.hpp"

namespace lvc {

const char* to_string(Controllability s) {
  switch (s) {
    case Controllability::controllable: return "controllable";
    case Controllability::not_controllable: return "not_controllable";
    case Controllability::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

constexpr double kPi = std::numbers::pi;

// Three-valued comparison so that anything within tolerance of a threshold
// can be surfaced as a threshold case instead of a verdict.
enum class Tri { fails, marginal, holds };

Tri greater(double x, double y, double tol) {
  const double scale = std::max({1.0, std::abs(x), std::abs(y)});
  if (std::abs(x - y) <= tol * scale) return Tri::marginal;
  return x > y ? Tri::holds : Tri::fails;
}

Tri greater_equal(double x, double y, double tol) { return greater(x, y, tol); }

Tri all_of(std::initializer_list<Tri> cs) {
  bool marginal = false;
  for (Tri c : cs) {
    if (c == Tri::fails) return Tri::fails;
    if (c == Tri::marginal) marginal = true;
  }
  return marginal ? Tri::marginal : Tri::holds;
}

Tri any_of(std::initializer_list<Tri> cs) {
  bool marginal = false;
  for (Tri c : cs) {
    if (c == Tri::holds) return Tri::holds;
    if (c == Tri::marginal) marginal = true;
  }
  return marginal ? Tri::marginal : Tri::fails;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

Verdict decide(Target target, Tri sufficient, Tri barrier, const std::string& yes_clause,
               const std::string& no_clause, const std::string& neither_note) {
  Verdict v;
  v.target = target;
  if (sufficient == Tri::holds) {
    v.status = Controllability::controllable;
    v.certificate = yes_clause;
  } else if (barrier == Tri::holds) {
    v.status = Controllability::not_controllable;
    v.certificate = no_clause;
  } else if (sufficient == Tri::marginal || barrier == Tri::marginal) {
    v.status = Controllability::inconclusive;
    v.threshold_case = true;
    v.certificate = "threshold case: a condition sits within tolerance of equality";
  } else {
    v.status = Controllability::inconclusive;
    v.certificate = neither_note;
  }
  return v;
}

void validate_nd(const NdParameters& p) {
  if (!(p.d1 > 0) || !(p.d2 > 0) || !(p.a > 0) || !(p.k1 > 0) || !(p.k1 < 1) ||
      !(p.k2 > 0) || !(p.k2 < 1))
    throw ConfigError("checker: parameters violate positivity or weak competition");
}

}  // namespace

std::vector<Verdict> check_all_targets_nd(const NdParameters& p, double lambda0,
                                          double tol) {
  validate_nd(p);
  if (!(lambda0 > 0)) throw PreconditionError("checker: lambda0 must be > 0");

  const double rate_u = 1.0 - p.a * p.k1;  // may be <= 0
  const double rate_v = p.a - p.k2;
  const Tri coexist = all_of({greater(p.a, p.k2, tol), greater(1.0, p.a * p.k1, tol)});

  // Barrier pair of the coupled steady state: both logistic rates must beat
  // the eigenvalue.
  const Tri barrier_pair =
      all_of({coexist, greater(rate_u / p.d1, lambda0, tol),
              greater(rate_v / p.d2, lambda0, tol)});

  std::vector<Verdict> out;

  {
    Verdict v = decide(Target::coexistence, coexist, Tri::fails,
                       "k2 < a < 1/k1: " + fmt(p.k2) + " < " + fmt(p.a) + " < " +
                           fmt(1.0 / p.k1),
                       "", "coexistence state does not exist (k2 < a < 1/k1 fails)");
    v.thresholds = {{"k2", p.k2}, {"a", p.a}, {"1/k1", 1.0 / p.k1}};
    out.push_back(std::move(v));
  }

  {
    const Tri small = greater_equal(lambda0, p.a / p.d2, tol);
    const Tri dominance = greater(p.k2, p.a, tol);
    Verdict v = decide(
        Target::u_only, any_of({small, dominance}), barrier_pair,
        small == Tri::holds
            ? "lambda0 >= a/d2: " + fmt(lambda0) + " >= " + fmt(p.a / p.d2)
            : "k2 > a: " + fmt(p.k2) + " > " + fmt(p.a),
        "barrier pair exists: lambda0 < min((1-a*k1)/d1, (a-k2)/d2) = " +
            fmt(std::min(rate_u / p.d1, rate_v / p.d2)),
        "no sufficient condition and no barrier certificate applies");
    v.thresholds = {{"a/d2", p.a / p.d2},
                    {"(1-a*k1)/d1", rate_u / p.d1},
                    {"(a-k2)/d2", rate_v / p.d2}};
    out.push_back(std::move(v));
  }

  {
    const Tri small = greater_equal(lambda0, 1.0 / p.d1, tol);
    const Tri dominance = greater(p.a * p.k1, 1.0, tol);
    Verdict v = decide(
        Target::v_only, any_of({small, dominance}), barrier_pair,
        small == Tri::holds
            ? "lambda0 >= 1/d1: " + fmt(lambda0) + " >= " + fmt(1.0 / p.d1)
            : "k1 > 1/a: " + fmt(p.k1) + " > " + fmt(1.0 / p.a),
        "barrier pair exists: lambda0 < min((1-a*k1)/d1, (a-k2)/d2) = " +
            fmt(std::min(rate_u / p.d1, rate_v / p.d2)),
        "no sufficient condition and no barrier certificate applies");
    v.thresholds = {{"1/d1", 1.0 / p.d1},
                    {"(1-a*k1)/d1", rate_u / p.d1},
                    {"(a-k2)/d2", rate_v / p.d2}};
    out.push_back(std::move(v));
  }

  {
    const Tri small = all_of({greater_equal(lambda0, 1.0 / p.d1, tol),
                              greater_equal(lambda0, p.a / p.d2, tol)});
    const Tri barrier_u =
        all_of({greater(1.0, p.a * p.k1, tol), greater(rate_u / p.d1, lambda0, tol)});
    const Tri barrier_v =
        all_of({greater(p.a, p.k2, tol), greater(rate_v / p.d2, lambda0, tol)});
    const Tri barrier = any_of({barrier_u, barrier_v});
    Verdict v = decide(
        Target::extinction, small, barrier,
        "lambda0 >= max(1/d1, a/d2): " + fmt(lambda0) + " >= " +
            fmt(std::max(1.0 / p.d1, p.a / p.d2)),
        barrier_u == Tri::holds
            ? "u-barrier exists: a < 1/k1 and lambda0 < (1-a*k1)/d1 = " + fmt(rate_u / p.d1)
            : "v-barrier exists: a > k2 and lambda0 < (a-k2)/d2 = " + fmt(rate_v / p.d2),
        "no sufficient condition and no barrier certificate applies");
    v.thresholds = {{"max(1/d1,a/d2)", std::max(1.0 / p.d1, p.a / p.d2)},
                    {"(1-a*k1)/d1", rate_u / p.d1},
                    {"(a-k2)/d2", rate_v / p.d2}};
    out.push_back(std::move(v));
  }

  {
    // Only a sufficient condition is known for the heterogeneous state; the
    // checker never claims its absence.
    const bool shape_ok = std::abs(p.a - 1.0) <= tol &&
                          std::abs(p.d1 - p.d2) <= tol * std::max(p.d1, p.d2);
    const Tri size = shape_ok ? greater(1.0 / p.d1, lambda0, tol) : Tri::fails;
    Verdict v = decide(Target::heterogeneous, size, Tri::fails,
                       "a = 1, d1 = d2, lambda0 < 1/d: " + fmt(lambda0) + " < " +
                           fmt(1.0 / p.d1),
                       "",
                       shape_ok ? "domain too small for the zero-boundary coexistence state"
                                : "requires a = 1 and d1 = d2");
    v.thresholds = {{"1/d", 1.0 / p.d1}};
    out.push_back(std::move(v));
  }

  return out;
}

std::vector<Verdict> check_all_targets(const Parameters& p, double tol) {
  const double lambda0 = kPi * kPi / (p.L * p.L);
  std::vector<Verdict> out =
      check_all_targets_nd(NdParameters{p.d1, p.d2, p.a, p.k1, p.k2}, lambda0, tol);

  // Attach the critical lengths the 1-D statements are phrased with.
  const double rate_u = 1.0 - p.a * p.k1;
  const double rate_v = p.a - p.k2;
  for (Verdict& v : out) {
    v.thresholds.emplace_back("L", p.L);
    switch (v.target) {
      case Target::u_only:
        v.thresholds.emplace_back("sqrt(d2/a)*pi", kPi * std::sqrt(p.d2 / p.a));
        break;
      case Target::v_only:
        v.thresholds.emplace_back("sqrt(d1)*pi", kPi * std::sqrt(p.d1));
        break;
      case Target::extinction:
        v.thresholds.emplace_back(
            "min(sqrt(d1),sqrt(d2/a))*pi",
            kPi * std::min(std::sqrt(p.d1), std::sqrt(p.d2 / p.a)));
        break;
      case Target::heterogeneous:
        v.thresholds.emplace_back("sqrt(d)*pi", kPi * std::sqrt(p.d1));
        break;
      case Target::coexistence:
        break;
    }
    if (rate_u > 0 && rate_v > 0 &&
        (v.target == Target::u_only || v.target == Target::v_only ||
         v.target == Target::extinction)) {
      v.thresholds.emplace_back(
          "max(sqrt(d1/(1-a*k1)),sqrt(d2/(a-k2)))*pi",
          kPi * std::max(std::sqrt(p.d1 / rate_u), std::sqrt(p.d2 / rate_v)));
    }
  }
  return out;
}

}  // namespace lvc
