#pragma once

#include <cstddef>
#include <vector>

#include "lvc/grid.hpp"

namespace lvc {

/// Sampled population densities on a grid (endpoints included).
struct FieldPair {
  std::vector<double> u;
  std::vector<double> v;

  static FieldPair uniform(const Grid& g, double u0, double v0);
  std::size_t size() const { return u.size(); }
};

/// max over nodes of max(|u-u'|, |v-v'|).
double sup_distance(const FieldPair& s, const FieldPair& t);

/// Sup-norm distance to a constant state.
double sup_distance_to(const FieldPair& s, double u_ref, double v_ref);

/// Largest violation of the state box [0,1]x[0,a]; 0 when the fields are
/// inside.
double box_violation(const FieldPair& s, double a);

}  // namespace lvc
