#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lvc/model.hpp"
#include "lvc/strategies.hpp"

namespace lvc {

enum class Controllability { controllable, not_controllable, inconclusive };

const char* to_string(Controllability s);

/// Per-target decision with the clause that fired and every threshold that
/// was evaluated. controllable is only issued on a sufficient condition,
/// not_controllable only on a barrier-existence condition; anything else,
/// including values within tolerance of a threshold, stays inconclusive.
struct Verdict {
  Target target;
  Controllability status = Controllability::inconclusive;
  std::string certificate;
  bool threshold_case = false;
  std::vector<std::pair<std::string, double>> thresholds;
};

/// Model constants without a domain; the n-dimensional statements only see
/// the principal Dirichlet eigenvalue.
struct NdParameters {
  double d1, d2, a, k1, k2;
};

/// Clause logic with a user-supplied lambda0 in place of pi^2/L^2.
std::vector<Verdict> check_all_targets_nd(const NdParameters& p, double lambda0,
                                          double tol = 1e-12);

/// 1-D verdicts; evaluates the same clauses at lambda0 = pi^2/L^2 and
/// attaches the critical lengths.
std::vector<Verdict> check_all_targets(const Parameters& p, double tol = 1e-12);

}  // namespace lvc
