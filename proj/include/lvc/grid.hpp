#pragma once

#include <vector>

namespace lvc {

/// Uniform spatial grid on [0, length] with n interior points and both
/// endpoints, spacing h = length/(n+1).
struct Grid {
  Grid(double length, int n_interior);

  double length;
  int interior;
  double h;
  std::vector<double> x;  // size interior + 2, x.front() = 0, x.back() = length

  int points() const { return interior + 2; }
};

}  // namespace lvc
