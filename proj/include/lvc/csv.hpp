#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lvc/grid.hpp"
#include "lvc/optimize.hpp"
#include "lvc/pde.hpp"

namespace lvc {

/// %.17g rendering, enough digits for exact double round trips.
std::string format_full(double v);

/// Long format, header `t,x,u,v`, one row per stored space-time sample.
void write_trajectory_csv(const std::string& path, const Trajectory& traj, const Grid& g);

/// Header `t,cu_left,cu_right,cv_left,cv_right`.
void write_control_csv(const std::string& path, const Trajectory& traj);

/// Header `x,value`.
void write_profile_csv(const std::string& path, const Grid& g,
                       const std::vector<double>& values);

/// Reads an `x,value` file written by write_profile_csv (header optional).
std::vector<std::pair<double, double>> read_profile_csv(const std::string& path);

/// Header `iter,J,grad_norm`.
void write_objective_csv(const std::string& path, const std::vector<double>& objective,
                         const std::vector<double>& grad_norms);

}  // namespace lvc
