#include "lvc/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "lvc/errors.hpp"

namespace lvc {

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  return out;
}

}  // namespace

void write_trajectory_csv(const std::string& path, const Trajectory& traj, const Grid& g) {
  std::ofstream out = open_out(path);
  out << "t,x,u,v\n";
  for (std::size_t s = 0; s < traj.times.size(); ++s) {
    const FieldPair& snap = traj.snapshots[s];
    const std::string t = format_full(traj.times[s]);
    for (int i = 0; i < g.points(); ++i)
      out << t << ',' << format_full(g.x[i]) << ',' << format_full(snap.u[i]) << ','
          << format_full(snap.v[i]) << '\n';
  }
}

void write_control_csv(const std::string& path, const Trajectory& traj) {
  std::ofstream out = open_out(path);
  out << "t,cu_left,cu_right,cv_left,cv_right\n";
  for (std::size_t k = 0; k < traj.control_times.size(); ++k) {
    const BoundaryValues& b = traj.control_record[k];
    out << format_full(traj.control_times[k]) << ',' << format_full(b.u_left) << ','
        << format_full(b.u_right) << ',' << format_full(b.v_left) << ','
        << format_full(b.v_right) << '\n';
  }
}

void write_profile_csv(const std::string& path, const Grid& g,
                       const std::vector<double>& values) {
  if (values.size() != static_cast<std::size_t>(g.points()))
    throw ConfigError("profile does not match the grid");
  std::ofstream out = open_out(path);
  out << "x,value\n";
  for (int i = 0; i < g.points(); ++i)
    out << format_full(g.x[i]) << ',' << format_full(values[i]) << '\n';
}

std::vector<std::pair<double, double>> read_profile_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read profile '" + path + "'");
  std::vector<std::pair<double, double>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    if (lineno == 1 && line.rfind("x,", 0) == 0) continue;  // header
    std::istringstream row(line);
    std::string sx, sy;
    if (!std::getline(row, sx, ',') || !std::getline(row, sy))
      throw ConfigError("profile '" + path + "': bad row " + std::to_string(lineno));
    try {
      out.emplace_back(std::stod(sx), std::stod(sy));
    } catch (const std::exception&) {
      throw ConfigError("profile '" + path + "': bad number on row " +
                        std::to_string(lineno));
    }
  }
  return out;
}

void write_objective_csv(const std::string& path, const std::vector<double>& objective,
                         const std::vector<double>& grad_norms) {
  std::ofstream out = open_out(path);
  out << "iter,J,grad_norm\n";
  for (std::size_t i = 0; i < objective.size(); ++i) {
    out << i << ',' << format_full(objective[i]) << ',';
    out << format_full(i < grad_norms.size() ? grad_norms[i] : 0.0) << '\n';
  }
}

}  // namespace lvc
