#include "lvc/grid.hpp"

#include "lvc/errors.hpp"

namespace lvc {

Grid::Grid(double length_, int n_interior) : length(length_), interior(n_interior) {
  if (!(length > 0)) throw PreconditionError("grid: length must be > 0");
  if (interior < 1) throw PreconditionError("grid: need at least one interior point");
  h = length / (interior + 1);
  x.resize(interior + 2);
  for (int i = 0; i <= interior + 1; ++i) x[i] = i * h;
  x.back() = length;  // avoid accumulated rounding at the right end
}

}  // namespace lvc
