#include "lvc/config.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "lvc/csv.hpp"
#include "lvc/errors.hpp"

namespace lvc {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& text) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || text.empty() || errno == ERANGE ||
      !std::isfinite(v))
    throw ConfigError("config: value of '" + key + "' is not a number: '" + text + "'");
  return v;
}

long parse_long(const std::string& key, const std::string& text) {
  errno = 0;
  char* end = nullptr;
  const long v = std::strtol(text.c_str(), &end, 10);
  if (end != text.c_str() + text.size() || text.empty() || errno == ERANGE)
    throw ConfigError("config: value of '" + key + "' is not an integer: '" + text + "'");
  return v;
}

InitialField parse_field(const std::string& key, const std::string& text) {
  InitialField f;
  if (text.rfind("profile:", 0) == 0) {
    f.profile_path = trim(text.substr(8));
    if (f.profile_path.empty())
      throw ConfigError("config: '" + key + "' has an empty profile path");
  } else {
    f.constant = parse_double(key, text);
  }
  return f;
}

const std::set<std::string> kKeys = {"d1", "d2",    "a",        "k1",   "k2",
                                     "L",  "n",     "dt",       "t_end", "u0",
                                     "v0", "strategy", "target", "seed", "horizon",
                                     "weights"};

}  // namespace

Scenario parse_config(const std::string& text) {
  Scenario s;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have[6] = {};
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config: line " + std::to_string(lineno) + " is not key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!kKeys.count(key))
      throw ConfigError("config: unknown key '" + key + "'");
    if (!seen.insert(key).second)
      throw ConfigError("config: duplicate key '" + key + "'");

    if (key == "d1") { s.d1 = parse_double(key, value); have[0] = true; }
    else if (key == "d2") { s.d2 = parse_double(key, value); have[1] = true; }
    else if (key == "a") { s.a = parse_double(key, value); have[2] = true; }
    else if (key == "k1") { s.k1 = parse_double(key, value); have[3] = true; }
    else if (key == "k2") { s.k2 = parse_double(key, value); have[4] = true; }
    else if (key == "L") { s.L = parse_double(key, value); have[5] = true; }
    else if (key == "n") {
      const long n = parse_long(key, value);
      if (n < 3 || n > 100000) throw ConfigError("config: n out of range [3, 100000]");
      s.n = static_cast<int>(n);
    } else if (key == "dt") {
      s.dt = parse_double(key, value);
      if (!(*s.dt > 0)) throw ConfigError("config: dt must be > 0");
    } else if (key == "t_end") {
      s.t_end = parse_double(key, value);
      if (!(*s.t_end > 0)) throw ConfigError("config: t_end must be > 0");
    } else if (key == "u0") {
      s.u0 = parse_field(key, value);
    } else if (key == "v0") {
      s.v0 = parse_field(key, value);
    } else if (key == "strategy") {
      s.strategy = value;
    } else if (key == "target") {
      s.target = value;
    } else if (key == "seed") {
      const long v = parse_long(key, value);
      if (v < 0) throw ConfigError("config: seed must be >= 0");
      s.seed = static_cast<std::uint64_t>(v);
    } else if (key == "horizon") {
      s.horizon = parse_double(key, value);
      if (!(*s.horizon > 0)) throw ConfigError("config: horizon must be > 0");
    } else if (key == "weights") {
      const auto comma = value.find(',');
      if (comma == std::string::npos)
        throw ConfigError("config: weights must be 'terminal,running'");
      const double wt = parse_double(key, trim(value.substr(0, comma)));
      const double wr = parse_double(key, trim(value.substr(comma + 1)));
      if (wt < 0 || wr < 0) throw ConfigError("config: weights must be >= 0");
      s.weights = {wt, wr};
    }
  }
  static const char* names[6] = {"d1", "d2", "a", "k1", "k2", "L"};
  for (int i = 0; i < 6; ++i)
    if (!have[i]) throw ConfigError(std::string("config: missing required key '") + names[i] + "'");
  scenario_parameters(s);  // reject out-of-domain constants early
  return s;
}

Scenario load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const Scenario& s) {
  std::ostringstream out;
  auto field = [&](const char* key, const InitialField& f) {
    if (f.is_profile())
      out << key << "=profile:" << f.profile_path << "\n";
    else
      out << key << "=" << format_full(*f.constant) << "\n";
  };
  out << "d1=" << format_full(s.d1) << "\n";
  out << "d2=" << format_full(s.d2) << "\n";
  out << "a=" << format_full(s.a) << "\n";
  out << "k1=" << format_full(s.k1) << "\n";
  out << "k2=" << format_full(s.k2) << "\n";
  out << "L=" << format_full(s.L) << "\n";
  out << "n=" << s.n << "\n";
  if (s.dt) out << "dt=" << format_full(*s.dt) << "\n";
  if (s.t_end) out << "t_end=" << format_full(*s.t_end) << "\n";
  if (s.u0) field("u0", *s.u0);
  if (s.v0) field("v0", *s.v0);
  if (s.strategy) out << "strategy=" << *s.strategy << "\n";
  if (s.target) out << "target=" << *s.target << "\n";
  if (s.seed) out << "seed=" << *s.seed << "\n";
  if (s.horizon) out << "horizon=" << format_full(*s.horizon) << "\n";
  if (s.weights)
    out << "weights=" << format_full(s.weights->first) << ","
        << format_full(s.weights->second) << "\n";
  return out.str();
}

Parameters scenario_parameters(const Scenario& s) {
  return validate_parameters(s.d1, s.d2, s.a, s.k1, s.k2, s.L);
}

namespace {

std::vector<double> materialize(const InitialField& f, const Grid& g) {
  if (!f.is_profile()) return std::vector<double>(g.points(), *f.constant);
  const auto samples = read_profile_csv(f.profile_path);
  if (samples.size() < 2)
    throw ConfigError("config: profile '" + f.profile_path + "' needs at least 2 samples");
  std::vector<double> out(g.points());
  for (int i = 0; i < g.points(); ++i) {
    const double x = g.x[i];
    if (x <= samples.front().first) { out[i] = samples.front().second; continue; }
    if (x >= samples.back().first) { out[i] = samples.back().second; continue; }
    auto it = std::lower_bound(samples.begin(), samples.end(), x,
                               [](const auto& s, double v) { return s.first < v; });
    const auto [x1, y1] = *it;
    const auto [x0, y0] = *(it - 1);
    out[i] = x1 > x0 ? y0 + (y1 - y0) * (x - x0) / (x1 - x0) : y0;
  }
  return out;
}

}  // namespace

FieldPair scenario_initial(const Scenario& s, const Grid& g) {
  if (!s.u0 || !s.v0) throw ConfigError("config: this command needs u0 and v0");
  FieldPair f;
  f.u = materialize(*s.u0, g);
  f.v = materialize(*s.v0, g);
  if (box_violation(f, s.a) > 0)
    throw ConfigError("config: initial data leaves the box [0,1]x[0,a]");
  return f;
}

}  // namespace lvc
