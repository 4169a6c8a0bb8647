// Command-line front end: scenario configs in, CSV/report/SVG artifacts out.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "lvc/checker.hpp"
#include "lvc/config.hpp"
#include "lvc/csv.hpp"
#include "lvc/errors.hpp"
#include "lvc/harness.hpp"
#include "lvc/strategies.hpp"
#include "lvc/svg.hpp"

namespace fs = std::filesystem;
using namespace lvc;

namespace {

struct CommonArgs {
  std::string config;
  std::string out_dir = "runs";
  std::string name;
};

struct RunDir {
  fs::path dir;

  explicit RunDir(const CommonArgs& args) {
    fs::path stem = fs::path(args.config).stem();
    dir = fs::path(args.out_dir) / (args.name.empty() ? stem.string() : args.name);
    fs::create_directories(dir);
  }

  std::string file(const std::string& name) const { return (dir / name).string(); }
};

Target parse_target(const std::string& text) {
  if (text == "coexistence" || text == "(u*,v*)") return Target::coexistence;
  if (text == "u-only" || text == "u_only" || text == "(1,0)") return Target::u_only;
  if (text == "v-only" || text == "v_only" || text == "(0,a)") return Target::v_only;
  if (text == "extinction" || text == "(0,0)") return Target::extinction;
  if (text == "heterogeneous" || text == "(u**,v**)") return Target::heterogeneous;
  throw ConfigError("unknown target '" + text + "'");
}

double pick_dt(const Scenario& s, const Parameters& p) {
  if (s.dt) {
    if (*s.dt > max_stable_dt(p))
      throw ConfigError("config: dt exceeds the stable bound " +
                        std::to_string(max_stable_dt(p)));
    return *s.dt;
  }
  return std::min(1e-2, 0.5 * max_stable_dt(p));
}

void add_snapshot_series(std::vector<PlotSeries>& series, const Trajectory& traj,
                         const Grid& g) {
  const std::size_t count = traj.snapshots.size();
  std::vector<std::size_t> picks;
  if (count <= 4)
    for (std::size_t i = 0; i < count; ++i) picks.push_back(i);
  else
    picks = {count / 8, count / 3, (2 * count) / 3, count - 1};
  const char* u_colors[] = {"#c6dbef", "#9ecae1", "#4292c6", "#084594"};
  const char* v_colors[] = {"#fcbba1", "#fc9272", "#ef3b2c", "#99000d"};
  for (std::size_t j = 0; j < picks.size(); ++j) {
    const FieldPair& s = traj.snapshots[picks[j]];
    char label[64];
    std::snprintf(label, sizeof label, "u, t=%.3g", traj.times[picks[j]]);
    series.push_back({g.x, s.u, u_colors[j % 4], false, 1.6, label});
    std::snprintf(label, sizeof label, "v, t=%.3g", traj.times[picks[j]]);
    series.push_back({g.x, s.v, v_colors[j % 4], false, 1.6, label});
  }
}

void add_constant_series(std::vector<PlotSeries>& series, const Grid& g, double value,
                         const char* color, const std::string& label) {
  series.push_back({{g.x.front(), g.x.back()}, {value, value}, color, true, 1.4, label});
}

void write_report(const std::string& path, const std::vector<std::pair<std::string, std::string>>& kv) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  for (const auto& [k, v] : kv) out << k << "=" << v << "\n";
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

// ---------------------------------------------------------------------------

int cmd_check(const CommonArgs& args, std::optional<double> lambda0) {
  Scenario s = load_config(args.config);
  Parameters p = scenario_parameters(s);
  std::vector<Verdict> verdicts =
      lambda0 ? check_all_targets_nd(NdParameters{p.d1, p.d2, p.a, p.k1, p.k2}, *lambda0)
              : check_all_targets(p);

  RunDir run(args);
  std::vector<std::pair<std::string, std::string>> kv;
  if (lambda0) kv.emplace_back("lambda0", fmt(*lambda0));
  for (const Verdict& v : verdicts) {
    kv.emplace_back(to_string(v.target), to_string(v.status));
    kv.emplace_back(std::string(to_string(v.target)) + "_certificate", v.certificate);
    if (v.threshold_case)
      kv.emplace_back(std::string(to_string(v.target)) + "_threshold_case", "true");
    for (const auto& [name, value] : v.thresholds)
      kv.emplace_back(std::string(to_string(v.target)) + "_threshold[" + name + "]",
                      fmt(value));
  }
  write_report(run.file("report.txt"), kv);
  for (const Verdict& v : verdicts)
    std::cout << to_string(v.target) << "=" << to_string(v.status) << "  ["
              << v.certificate << "]\n";
  return 0;
}

int cmd_simulate(const CommonArgs& args, const std::string& strategy_flag) {
  Scenario s = load_config(args.config);
  Parameters p = scenario_parameters(s);
  Grid g(p.L, s.n);
  FieldPair initial = scenario_initial(s, g);

  std::string strategy = strategy_flag;
  if (strategy.empty()) strategy = s.strategy.value_or("");
  if (strategy.empty()) throw ConfigError("simulate needs a strategy (config or --strategy)");

  SimulateOptions opt;
  opt.dt = pick_dt(s, p);
  opt.t_end = s.t_end.value_or(30.0);
  opt.settle_tol = 0;

  RunDir run(args);
  std::vector<std::pair<std::string, std::string>> kv;
  kv.emplace_back("strategy", strategy);

  StrategyOutcome outcome;
  double target_u = 0, target_v = 0;
  if (strategy == "neumann-shadow") {
    outcome = neumann_shadow(initial, p, g, opt);
    const Regime regime = classify_regime(p);
    kv.emplace_back("regime", to_string(regime));
    switch (regime) {
      case Regime::coexistence: {
        auto st = coexistence_state(p);
        target_u = st.u_star; target_v = st.v_star;
        break;
      }
      case Regime::u_dominant: target_u = 1; target_v = 0; break;
      case Regime::v_dominant: target_u = 0; target_v = p.a; break;
    }
  } else if (strategy == "static") {
    if (!s.target) throw ConfigError("static strategy needs a target");
    const Target target = parse_target(*s.target);
    StaticControlPlan plan = static_control(target, p);
    kv.emplace_back("certified", plan.certified ? "true" : "false");
    kv.emplace_back("certificate", plan.clause);
    kv.emplace_back("critical_length", fmt(plan.critical_length));
    target_u = plan.values.u_left;
    target_v = plan.values.v_left;
    FieldPair target_field = FieldPair::uniform(g, target_u, target_v);
    if (target == Target::heterogeneous) {
      HeterogeneousState h = heterogeneous_coexistence(p, s.n);
      target_field.u = h.u.values;
      target_field.v = h.v.values;
    }
    outcome.trajectory = simulate(initial, plan.control, p, g, opt, &target_field);
    outcome.control = plan.control;
    outcome.terminal_error = sup_distance(outcome.trajectory.final_state(), target_field);
    if (target == Target::heterogeneous) {
      write_profile_csv(run.file("u_ss.csv"), g, target_field.u);
      write_profile_csv(run.file("v_ss.csv"), g, target_field.v);
    }
  } else {
    throw ConfigError("unknown strategy '" + strategy +
                      "' (use neumann-shadow or static; wave has its own command)");
  }

  kv.emplace_back("t_end", fmt(outcome.trajectory.final_time()));
  kv.emplace_back("settled", outcome.trajectory.settled ? "true" : "false");
  if (outcome.trajectory.settled)
    kv.emplace_back("settle_time", fmt(outcome.trajectory.settle_time));
  kv.emplace_back("terminal_error", fmt(outcome.terminal_error));
  if (outcome.phase_switch_time)
    kv.emplace_back("phase_switch_time", fmt(*outcome.phase_switch_time));

  write_trajectory_csv(run.file("trajectory.csv"), outcome.trajectory, g);
  write_control_csv(run.file("controls.csv"), outcome.trajectory);
  write_report(run.file("report.txt"), kv);

  std::vector<PlotSeries> series;
  add_snapshot_series(series, outcome.trajectory, g);
  add_constant_series(series, g, target_u, "#084594", "u target");
  add_constant_series(series, g, target_v, "#99000d", "v target");
  emit_plot(run.file("plot.svg"), "state snapshots (" + strategy + ")", series);
  std::cout << "terminal_error=" << fmt(outcome.terminal_error) << "\n";
  return 0;
}

int cmd_steady(const CommonArgs& args, const std::string& kind) {
  Scenario s = load_config(args.config);
  Parameters p = scenario_parameters(s);
  Grid g(p.L, s.n);
  RunDir run(args);
  std::vector<std::pair<std::string, std::string>> kv;
  std::vector<PlotSeries> series;

  if (kind == "barriers" || kind == "all") {
    BarrierProfiles b = barrier_profiles(p, s.n);
    kv.emplace_back("eta1_exists", b.eta1 ? "true" : "false");
    kv.emplace_back("eta2_exists", b.eta2 ? "true" : "false");
    if (b.critical_length_u)
      kv.emplace_back("critical_length_u", fmt(*b.critical_length_u));
    if (b.critical_length_v)
      kv.emplace_back("critical_length_v", fmt(*b.critical_length_v));
    if (b.eta1) {
      kv.emplace_back("eta1_residual", fmt(b.eta1->residual_norm));
      write_profile_csv(run.file("eta1.csv"), g, b.eta1->values);
      series.push_back({g.x, b.eta1->values, "#000000", true, 1.6, "eta1 (u barrier)"});
    }
    if (b.eta2) {
      kv.emplace_back("eta2_residual", fmt(b.eta2->residual_norm));
      write_profile_csv(run.file("eta2.csv"), g, b.eta2->values);
      series.push_back({g.x, b.eta2->values, "#888888", true, 1.6, "eta2 (v barrier)"});
    }
  }
  if (kind == "coupled" || kind == "all") {
    try {
      CoupledSteadyState cs = solve_coupled_steady(p, s.n);
      kv.emplace_back("coupled_exists", "true");
      kv.emplace_back("eta", fmt(cs.eta));
      kv.emplace_back("delta", fmt(cs.delta));
      kv.emplace_back("coupled_residual", fmt(cs.residual_norm));
      kv.emplace_back("coupled_sweeps", fmt(cs.sweeps));
      kv.emplace_back("coupled_pair_gap", fmt(cs.pair_gap));
      write_profile_csv(run.file("u_s.csv"), g, cs.u_s);
      write_profile_csv(run.file("v_s.csv"), g, cs.v_s);
      write_profile_csv(run.file("lower_u.csv"), g, cs.lower_u);
      write_profile_csv(run.file("lower_v.csv"), g, cs.lower_v);
      series.push_back({g.x, cs.u_s, "#084594", false, 1.8, "u_s"});
      series.push_back({g.x, cs.v_s, "#99000d", false, 1.8, "v_s"});
      series.push_back({g.x, cs.lower_u, "#084594", true, 1.2, "eta*phi"});
      series.push_back({g.x, cs.lower_v, "#99000d", true, 1.2, "delta*phi"});
    } catch (const PreconditionError& e) {
      if (kind == "coupled") throw;
      kv.emplace_back("coupled_exists", "false");
      kv.emplace_back("coupled_note", e.what());
    }
  }
  if (kind == "heterogeneous" || kind == "all") {
    try {
      HeterogeneousState h = heterogeneous_coexistence(p, s.n);
      kv.emplace_back("heterogeneous_exists", "true");
      write_profile_csv(run.file("u_ss.csv"), g, h.u.values);
      write_profile_csv(run.file("v_ss.csv"), g, h.v.values);
      series.push_back({g.x, h.u.values, "#2ca02c", false, 1.8, "u**"});
      series.push_back({g.x, h.v.values, "#ff7f0e", false, 1.8, "v**"});
    } catch (const PreconditionError& e) {
      if (kind == "heterogeneous") throw;
      kv.emplace_back("heterogeneous_exists", "false");
      kv.emplace_back("heterogeneous_note", e.what());
    }
  }
  if (kind == "theta") {
    Profile theta = solve_logistic_bvp(p.d1, 1.0, 1.0, p.L, s.n, ProfileKind::theta);
    kv.emplace_back("theta_residual", fmt(theta.residual_norm));
    write_profile_csv(run.file("theta.csv"), g, theta.values);
    series.push_back({g.x, theta.values, "#2ca02c", false, 1.8, "theta"});
  }

  write_report(run.file("report.txt"), kv);
  if (!series.empty()) emit_plot(run.file("plot.svg"), "steady profiles", series);
  for (const auto& [k, v] : kv) std::cout << k << "=" << v << "\n";
  return 0;
}

int cmd_barrier(const CommonArgs& args, const std::string& which, int controls,
                int switches) {
  Scenario s = load_config(args.config);
  Parameters p = scenario_parameters(s);
  Grid g(p.L, s.n);
  FieldPair initial = scenario_initial(s, g);

  BarrierHarnessOptions opt;
  opt.n_controls = controls;
  opt.switches = switches;
  opt.dt = pick_dt(s, p);
  opt.t_end = s.t_end.value_or(50.0);
  opt.seed = s.seed.value_or(1);

  RunDir run(args);
  std::vector<std::pair<std::string, std::string>> kv;
  kv.emplace_back("which", which);
  kv.emplace_back("n_controls", std::to_string(opt.n_controls));
  kv.emplace_back("seed", std::to_string(opt.seed));

  std::ofstream minima(run.file("minima.csv"));
  std::vector<PlotSeries> series;

  if (which == "steady") {
    SteadyBarrierReport rep = verify_steady_barrier(p, initial, g, opt);
    kv.emplace_back("pass", rep.pass ? "true" : "false");
    kv.emplace_back("max_excess_u", fmt(rep.max_excess_u));
    kv.emplace_back("max_deficit_v", fmt(rep.max_deficit_v));
    kv.emplace_back("dist_to_one_bound", fmt(rep.dist_to_one_bound));
    kv.emplace_back("observed_min_dist_to_one", fmt(rep.observed_min_dist_to_one));
    minima << "control,max_excess_u,max_deficit_v\n";
    for (std::size_t i = 0; i < rep.per_control_max_excess_u.size(); ++i)
      minima << i << ',' << format_full(rep.per_control_max_excess_u[i]) << ','
             << format_full(rep.per_control_max_deficit_v[i]) << '\n';
    CoupledSteadyState cs = solve_coupled_steady(p, s.n);
    series.push_back({g.x, cs.u_s, "#000000", true, 1.6, "u_s"});
    series.push_back({g.x, cs.v_s, "#888888", true, 1.6, "v_s"});
    if (!rep.pass) {
      write_report(run.file("report.txt"), kv);
      throw ConvergenceError("steady barrier violated; see " + run.file("report.txt"));
    }
  } else {
    BarrierSpecies species = which == "u"   ? BarrierSpecies::u
                             : which == "v" ? BarrierSpecies::v
                                            : BarrierSpecies::both;
    BarrierReport rep = verify_barrier(p, species, initial, g, opt);
    kv.emplace_back("pass", rep.pass ? "true" : "false");
    if (species != BarrierSpecies::v) kv.emplace_back("min_margin_u", fmt(rep.min_margin_u));
    if (species != BarrierSpecies::u) kv.emplace_back("min_margin_v", fmt(rep.min_margin_v));
    minima << "control,min_margin_u,min_margin_v\n";
    const std::size_t rows =
        std::max(rep.per_control_min_u.size(), rep.per_control_min_v.size());
    for (std::size_t i = 0; i < rows; ++i) {
      minima << i << ',';
      minima << (i < rep.per_control_min_u.size() ? format_full(rep.per_control_min_u[i])
                                                  : "") << ',';
      minima << (i < rep.per_control_min_v.size() ? format_full(rep.per_control_min_v[i])
                                                  : "") << '\n';
    }
    BarrierProfiles b = barrier_profiles(p, s.n);
    if (b.eta1 && species != BarrierSpecies::v)
      series.push_back({g.x, b.eta1->values, "#000000", true, 1.6, "eta1"});
    if (b.eta2 && species != BarrierSpecies::u)
      series.push_back({g.x, b.eta2->values, "#888888", true, 1.6, "eta2"});
    if (!rep.pass) {
      write_report(run.file("report.txt"), kv);
      throw ConvergenceError("barrier violated; see " + run.file("report.txt"));
    }
  }

  // A zero-control run for the figure: the barrier holds its species up while
  // the uncontrolled one may collapse.
  SimulateOptions sim;
  sim.dt = opt.dt;
  sim.t_end = opt.t_end;
  Trajectory traj = simulate(initial, BoundaryControl(), p, g, sim);
  add_snapshot_series(series, traj, g);
  write_trajectory_csv(run.file("trajectory.csv"), traj, g);
  write_report(run.file("report.txt"), kv);
  emit_plot(run.file("plot.svg"), "barrier vs zero-control run", series);
  for (const auto& [k, v] : kv) std::cout << k << "=" << v << "\n";
  return 0;
}

int cmd_wave(const CommonArgs& args, double speed, double half_width, int wave_n,
             bool profile_only) {
  Scenario s = load_config(args.config);
  Parameters p = scenario_parameters(s);
  RunDir run(args);

  TravelingWave wave = traveling_wave_profile(p, speed, half_width, wave_n);
  std::vector<std::pair<std::string, std::string>> kv;
  kv.emplace_back("speed", fmt(wave.c));
  kv.emplace_back("min_speed", fmt(min_wave_speed(p)));
  kv.emplace_back("residual", fmt(wave.residual_norm));
  kv.emplace_back("tail_error", fmt(wave.tail_error));
  kv.emplace_back("truncation_gap", fmt(wave.truncation_gap));
  kv.emplace_back("u_star", fmt(wave.u_star));
  kv.emplace_back("v_star", fmt(wave.v_star));

  {
    std::ofstream out(run.file("wave.csv"));
    out << "xi,U,V\n";
    for (std::size_t i = 0; i < wave.xi.size(); ++i)
      out << format_full(wave.xi[i]) << ',' << format_full(wave.U[i]) << ','
          << format_full(wave.V[i]) << '\n';
  }
  {
    std::vector<PlotSeries> series;
    series.push_back({wave.xi, wave.U, "#084594", false, 1.8, "U"});
    series.push_back({wave.xi, wave.V, "#99000d", false, 1.8, "V"});
    emit_plot(run.file("wave_profile.svg"), "traveling front", series);
  }

  if (!profile_only) {
    Grid g(p.L, s.n);
    FieldPair initial = scenario_initial(s, g);
    SimulateOptions opt;
    opt.dt = pick_dt(s, p);
    opt.t_end = s.t_end.value_or(60.0);
    WaveStrategyOutcome outcome = traveling_wave_strategy(initial, p, g, wave, opt);
    kv.emplace_back("phase_switch_time", fmt(*outcome.outcome.phase_switch_time));
    kv.emplace_back("shift", fmt(outcome.shift));
    kv.emplace_back("sandwich_violation", fmt(outcome.sandwich_violation));
    kv.emplace_back("terminal_error", fmt(outcome.outcome.terminal_error));
    write_trajectory_csv(run.file("trajectory.csv"), outcome.outcome.trajectory, g);
    write_control_csv(run.file("controls.csv"), outcome.outcome.trajectory);

    std::vector<PlotSeries> series;
    add_snapshot_series(series, outcome.outcome.trajectory, g);
    add_constant_series(series, g, wave.u_star, "#084594", "u*");
    add_constant_series(series, g, wave.v_star, "#99000d", "v*");
    emit_plot(run.file("plot.svg"), "two-phase wave strategy", series);
  }
  write_report(run.file("report.txt"), kv);
  for (const auto& [k, v] : kv) std::cout << k << "=" << v << "\n";
  return 0;
}

int cmd_optimize(const CommonArgs& args, int max_iters) {
  Scenario s = load_config(args.config);
  Parameters p = scenario_parameters(s);
  Grid g(p.L, s.n);
  FieldPair initial = scenario_initial(s, g);
  if (!s.horizon) throw ConfigError("optimize needs horizon");

  TrackingProblem prob{p, g, initial, {}, 0, 0, 0, 0};
  prob.dt = pick_dt(s, p);
  prob.steps = static_cast<int>(std::lround(*s.horizon / prob.dt));
  prob.w_terminal = s.weights ? s.weights->first : 1.0;
  prob.w_running = s.weights ? s.weights->second : 1.0;

  const Target target = s.target ? parse_target(*s.target) : Target::coexistence;
  if (target == Target::heterogeneous) {
    HeterogeneousState h = heterogeneous_coexistence(p, s.n);
    prob.target.u = h.u.values;
    prob.target.v = h.v.values;
  } else {
    const BoundaryValues tv = target_boundary_values(target, p);
    prob.target = FieldPair::uniform(g, tv.u_left, tv.v_left);
  }

  OptimizationResult res = solve_tracking(prob, max_iters);
  if (res.objective_history.size() <= 1 && res.stalled)
    throw ConvergenceError("optimizer made no progress");

  RunDir run(args);
  std::vector<std::pair<std::string, std::string>> kv;
  kv.emplace_back("target", to_string(target));
  kv.emplace_back("horizon", fmt(*s.horizon));
  kv.emplace_back("steps", std::to_string(prob.steps));
  kv.emplace_back("w_terminal", fmt(prob.w_terminal));
  kv.emplace_back("w_running", fmt(prob.w_running));
  kv.emplace_back("iterations", std::to_string(res.iterations));
  kv.emplace_back("objective", fmt(res.objective_history.back()));
  kv.emplace_back("final_gradient_norm", fmt(res.final_gradient_norm));
  kv.emplace_back("terminal_error", fmt(res.terminal_error));
  kv.emplace_back("turnpike_fraction", fmt(res.turnpike_fraction));
  kv.emplace_back("stalled", res.stalled ? "true" : "false");
  write_report(run.file("report.txt"), kv);
  write_objective_csv(run.file("objective.csv"), res.objective_history, res.gradient_norms);

  {
    std::ofstream out(run.file("controls.csv"));
    out << "t,cu_left,cu_right,cv_left,cv_right\n";
    for (int k = 0; k < res.control.steps; ++k) {
      const BoundaryValues b = res.control.step_values(k);
      out << format_full((k + 1) * prob.dt) << ',' << format_full(b.u_left) << ','
          << format_full(b.u_right) << ',' << format_full(b.v_left) << ','
          << format_full(b.v_right) << '\n';
    }
  }
  {
    std::vector<double> t(res.control.steps);
    std::vector<double> cu_l(res.control.steps), cu_r(res.control.steps),
        cv_l(res.control.steps), cv_r(res.control.steps);
    for (int k = 0; k < res.control.steps; ++k) {
      t[k] = (k + 1) * prob.dt;
      const BoundaryValues b = res.control.step_values(k);
      cu_l[k] = b.u_left;
      cu_r[k] = b.u_right;
      cv_l[k] = b.v_left;
      cv_r[k] = b.v_right;
    }
    std::vector<PlotSeries> series;
    series.push_back({t, cu_l, "#2ca02c", false, 1.5, "cu left"});
    series.push_back({t, cu_r, "#98df8a", false, 1.5, "cu right"});
    series.push_back({t, cv_l, "#ff7f0e", false, 1.5, "cv left"});
    series.push_back({t, cv_r, "#ffbb78", false, 1.5, "cv right"});
    const int last = g.points() - 1;
    series.push_back({{t.front(), t.back()},
                      {prob.target.u[0], prob.target.u[0]},
                      "#2ca02c", true, 1.2, "u target (left)"});
    series.push_back({{t.front(), t.back()},
                      {prob.target.v[last], prob.target.v[last]},
                      "#ff7f0e", true, 1.2, "v target (right)"});
    emit_plot(run.file("plot.svg"), "optimal boundary controls", series);
  }
  for (const auto& [k, v] : kv) std::cout << k << "=" << v << "\n";
  return 0;
}

int cmd_reach(const CommonArgs& args, double eps, int max_iters) {
  Scenario s = load_config(args.config);
  Parameters p = scenario_parameters(s);
  Grid g(p.L, s.n);
  FieldPair initial = scenario_initial(s, g);
  if (!s.horizon) throw ConfigError("reach needs horizon (the exact-steering window)");

  const double dt = pick_dt(s, p);
  ReachOutcome out =
      finite_time_reach(initial, p, g, *s.horizon, eps, dt, s.t_end.value_or(30.0), max_iters);

  RunDir run(args);
  std::vector<std::pair<std::string, std::string>> kv;
  kv.emplace_back("eps", fmt(eps));
  kv.emplace_back("horizon", fmt(*s.horizon));
  kv.emplace_back("t1", fmt(out.t1));
  kv.emplace_back("terminal_error", fmt(out.optimization.terminal_error));
  kv.emplace_back("iterations", std::to_string(out.optimization.iterations));
  kv.emplace_back("stalled", out.optimization.stalled ? "true" : "false");
  write_report(run.file("report.txt"), kv);
  write_trajectory_csv(run.file("trajectory.csv"), out.outcome.trajectory, g);
  write_control_csv(run.file("controls.csv"), out.outcome.trajectory);
  write_objective_csv(run.file("objective.csv"), out.optimization.objective_history,
                      out.optimization.gradient_norms);

  const HomogeneousState star = coexistence_state(p);
  std::vector<PlotSeries> series;
  add_snapshot_series(series, out.outcome.trajectory, g);
  add_constant_series(series, g, star.u_star, "#084594", "u*");
  add_constant_series(series, g, star.v_star, "#99000d", "v*");
  emit_plot(run.file("plot.svg"), "finite-time reach", series);
  for (const auto& [k, v] : kv) std::cout << k << "=" << v << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"boundary-control laboratory for the weak-competition system"};
  app.require_subcommand(1);

  CommonArgs common;
  auto add_common = [&common](CLI::App* cmd) {
    cmd->add_option("--config", common.config, "scenario config file")->required();
    cmd->add_option("--out", common.out_dir, "output root directory");
    cmd->add_option("--name", common.name, "run name (default: config stem)");
  };

  auto* check = app.add_subcommand("check", "evaluate controllability verdicts");
  add_common(check);
  std::optional<double> lambda0;
  check->add_option("--lambda0", lambda0,
                    "principal eigenvalue for an n-dimensional domain (skips L)");

  auto* simulate_cmd = app.add_subcommand("simulate", "run a control strategy");
  add_common(simulate_cmd);
  std::string strategy_flag;
  simulate_cmd->add_option("--strategy", strategy_flag, "neumann-shadow | static");

  auto* steady = app.add_subcommand("steady", "compute steady profiles and barriers");
  add_common(steady);
  std::string kind = "all";
  steady->add_option("--kind", kind, "all | barriers | coupled | heterogeneous | theta");

  auto* barrier = app.add_subcommand("barrier", "stress-test a barrier with random controls");
  add_common(barrier);
  std::string which = "u";
  int controls = 20;
  int switches = 20;
  barrier->add_option("--which", which, "u | v | both | steady");
  barrier->add_option("--controls", controls, "number of random controls");
  barrier->add_option("--switches", switches,
                      "piecewise-constant intervals per control (raise to stress harder)");

  auto* wave = app.add_subcommand("wave", "traveling front profile and two-phase strategy");
  add_common(wave);
  double speed = 0, half_width = 40;
  int wave_n = 2400;
  bool profile_only = false;
  wave->add_option("--speed", speed, "wave speed (above the threshold)")->required();
  wave->add_option("--half-width", half_width, "truncation half-width");
  wave->add_option("--wave-n", wave_n, "interior nodes of the wave grid");
  wave->add_flag("--profile-only", profile_only, "skip the controlled run");

  auto* optimize = app.add_subcommand("optimize", "adjoint-based tracking control");
  add_common(optimize);
  int max_iters = 300;
  optimize->add_option("--max-iters", max_iters, "projected gradient iterations");

  auto* reach = app.add_subcommand("reach", "two-phase finite-time steering to (u*,v*)");
  add_common(reach);
  double eps = 0.05;
  int reach_iters = 400;
  reach->add_option("--eps", eps, "phase switch radius");
  reach->add_option("--max-iters", reach_iters, "projected gradient iterations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return cmd_check(common, lambda0);
    if (*simulate_cmd) return cmd_simulate(common, strategy_flag);
    if (*steady) return cmd_steady(common, kind);
    if (*barrier) return cmd_barrier(common, which, controls, switches);
    if (*wave) return cmd_wave(common, speed, half_width, wave_n, profile_only);
    if (*optimize) return cmd_optimize(common, max_iters);
    if (*reach) return cmd_reach(common, eps, reach_iters);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
