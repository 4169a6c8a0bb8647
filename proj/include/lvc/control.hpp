#pragma once

#include <functional>
#include <vector>

namespace lvc {

/// Dirichlet boundary data for both species at both endpoints.
struct BoundaryValues {
  double u_left = 0;
  double u_right = 0;
  double v_left = 0;
  double v_right = 0;
};

/// True iff the values lie in [0,1] x [0,a] (with slack tol).
bool admissible(const BoundaryValues& b, double a, double tol = 0.0);

/// Time-indexed boundary control. Strategies either wrap an analytic trace
/// formula or a table of samples; sampled controls interpolate piecewise
/// linearly in time (piecewise-constant variant for the randomized harness)
/// and clamp outside the sampled range.
class BoundaryControl {
 public:
  BoundaryControl();  // zero control

  static BoundaryControl constant(const BoundaryValues& values);
  static BoundaryControl sampled(std::vector<double> times,
                                 std::vector<BoundaryValues> values);
  static BoundaryControl piecewise_constant(std::vector<double> times,
                                            std::vector<BoundaryValues> values);
  static BoundaryControl from_function(std::function<BoundaryValues(double)> f);

  BoundaryValues operator()(double t) const { return eval_(t); }

 private:
  std::function<BoundaryValues(double)> eval_;
};

}  // namespace lvc
