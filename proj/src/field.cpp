#include "lvc/field.hpp"

#include <algorithm>
#include <cmath>

namespace lvc {

FieldPair FieldPair::uniform(const Grid& g, double u0, double v0) {
  FieldPair s;
  s.u.assign(g.points(), u0);
  s.v.assign(g.points(), v0);
  return s;
}

double sup_distance(const FieldPair& s, const FieldPair& t) {
  double m = 0;
  for (std::size_t i = 0; i < s.u.size(); ++i) {
    m = std::max(m, std::abs(s.u[i] - t.u[i]));
    m = std::max(m, std::abs(s.v[i] - t.v[i]));
  }
  return m;
}

double sup_distance_to(const FieldPair& s, double u_ref, double v_ref) {
  double m = 0;
  for (std::size_t i = 0; i < s.u.size(); ++i) {
    m = std::max(m, std::abs(s.u[i] - u_ref));
    m = std::max(m, std::abs(s.v[i] - v_ref));
  }
  return m;
}

double box_violation(const FieldPair& s, double a) {
  double m = 0;
  for (double ui : s.u) m = std::max({m, -ui, ui - 1.0});
  for (double vi : s.v) m = std::max({m, -vi, vi - a});
  return m;
}

}  // namespace lvc
