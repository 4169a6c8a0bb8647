#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "lvc/field.hpp"
#include "lvc/grid.hpp"
#include "lvc/model.hpp"

namespace lvc {

/// Initial field: a spatially uniform constant or a sampled profile loaded
/// from a CSV file (x,value), interpolated onto the run grid.
struct InitialField {
  std::optional<double> constant;
  std::string profile_path;  // set iff constant is empty

  bool is_profile() const { return !constant.has_value(); }
};

/// One scenario, as read from a key=value config file.
struct Scenario {
  double d1 = 0, d2 = 0, a = 0, k1 = 0, k2 = 0, L = 0;  // required
  int n = 200;
  std::optional<double> dt;
  std::optional<double> t_end;
  std::optional<InitialField> u0;
  std::optional<InitialField> v0;
  std::optional<std::string> strategy;
  std::optional<std::string> target;
  std::optional<std::uint64_t> seed;
  std::optional<double> horizon;
  std::optional<std::pair<double, double>> weights;  // terminal, running
};

/// Line-oriented key=value parsing; '#' starts a comment. Unknown keys and
/// malformed or out-of-domain values raise ConfigError. The six model
/// constants are required.
Scenario parse_config(const std::string& text);
Scenario load_config(const std::string& path);

/// Writes every present key with 17 significant digits, so that
/// parse(serialize(s)) == s.
std::string serialize_config(const Scenario& s);

Parameters scenario_parameters(const Scenario& s);

/// Materializes u0/v0 on the grid (constants become uniform fields, profiles
/// are interpolated linearly) and validates the state box.
FieldPair scenario_initial(const Scenario& s, const Grid& g);

}  // namespace lvc
