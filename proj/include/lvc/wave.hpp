#pragma once

#include <vector>

#include "lvc/model.hpp"

namespace lvc {

/// Monotone front connecting (0, a) to (u*, v*), sampled on a truncated line
/// [-X, X]. Outside the truncation window evaluation clamps to the limits.
struct TravelingWave {
  double c = 0;            // wave speed
  double half_width = 0;   // X
  std::vector<double> xi;  // sample locations, phase-shifted so U(0) = u*/2
  std::vector<double> U;   // non-decreasing, 0 -> u*
  std::vector<double> V;   // non-increasing, a -> v*
  double residual_norm = 0;   // discrete residual at every interior node (sup norm)
  double tail_error = 0;      // endpoint values against the limit states
  double truncation_gap = 0;  // how far the profile still is from its limits one
                              // node inside the window; shrinks with half_width
  double u_star = 0, v_star = 0, a = 0;

  double eval_u(double xi) const;
  double eval_v(double xi) const;
};

/// Fronts exist for every c above 2 sqrt((1 - a k1)/(1 - k1 k2)); requires
/// a < 1 and the coexistence condition.
double min_wave_speed(const Parameters& p);

/// Damped Newton on the central-difference discretization of the wave system
/// with clamped end values on [-X, X]; the translate is then pinned by the
/// phase condition U(0) = u*/2 (shifting the sample locations). m is the
/// interior node count. Monotonicity is verified a posteriori; failures
/// suggest X too small or c too close to the threshold speed.
TravelingWave traveling_wave_profile(const Parameters& p, double c, double half_width,
                                     int m);

}  // namespace lvc
