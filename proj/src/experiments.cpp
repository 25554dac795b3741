#include "thindiff/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "thindiff/diagnostics.hpp"
#include "thindiff/errors.hpp"
#include "thindiff/sweep.hpp"

namespace thindiff {

namespace {

std::set<long> snapshot_steps(const RunConfig& cfg, long n_steps) {
  std::vector<double> times = cfg.snapshots;
  if (times.empty()) times = {0.0, cfg.t_final};
  std::set<long> steps;
  for (double t : times) {
    long s = std::llround(t / cfg.dt);
    steps.insert(std::clamp<long>(s, 0, n_steps));
  }
  return steps;
}

}  // namespace

RunOutputs execute_run(const RunConfig& cfg) {
  const GridSet g = validate_config(cfg);
  const Kernels ks = kernels_from(cfg);
  const StepPlan plan = plan_from(cfg);
  const std::set<long> want = snapshot_steps(cfg, plan.n_steps());

  RunOutputs out;
  if (is_limit(cfg.model)) {
    CoupledState state = initial_state(cfg, g);
    const RecordHook capture = [&](long step, const CoupledState& s) {
      if (!want.count(step)) return;
      out.snapshots.push_back({s.t, s.u, s.V});
    };
    out.series = run(g, cfg.model, ks, state, plan, capture);
  } else {
    EpsState state = initial_eps_state(cfg, g);
    const EpsRecordHook capture = [&](long step, const EpsState& s) {
      if (!want.count(step)) return;
      out.snapshots.push_back({s.t, s.u, average_over_r2(s.v, g.box)});
    };
    out.series = run(g, cfg.model, ks, state, plan, capture);
  }
  return out;
}

RunConfig experiment_config(int number) {
  if (number < 1 || number > 6)
    throw config_error("experiment number must lie in 1..6, got " +
                       std::to_string(number));
  RunConfig cfg;
  cfg.out_dir = "experiment" + std::to_string(number);
  switch (number) {
    case 1:
      cfg.model = ModelKind::LimitSource;
      cfg.ic_u = {IcKind::Zero, 0};
      cfg.ic_v = {IcKind::One, 0};
      break;
    case 2:
      cfg.model = ModelKind::LimitSource;
      cfg.ic_u = {IcKind::CosProduct, 0};
      cfg.ic_v = {IcKind::One, 0};
      break;
    case 3:
      cfg.model = ModelKind::LimitSource;
      cfg.ic_u = {IcKind::CosProduct, 0};
      cfg.ic_v = {IcKind::ParabolaDown, 0};
      // Largest initial amplitude of the six setups; the shared decay rate
      // 0.0974 needs the longer horizon to settle within 0.01 of steady.
      cfg.t_final = 80.0;
      break;
    case 4:
      cfg.model = ModelKind::LimitBoundary;
      cfg.grid.gamma = Side::Right;
      cfg.ic_u = {IcKind::Zero, 0};
      cfg.ic_v = {IcKind::One, 0};
      break;
    case 5:
      cfg.model = ModelKind::LimitBoundary;
      cfg.grid.gamma = Side::Right;
      cfg.ic_u = {IcKind::RadialSq, 0};
      cfg.ic_v = {IcKind::ParabolaDown, 0};
      break;
    case 6:
      cfg.model = ModelKind::LimitBoundary;
      cfg.grid.gamma = Side::Right;
      cfg.ic_u = {IcKind::RadialSq, 0};
      cfg.ic_v = {IcKind::Sq, 0};
      break;
  }
  return cfg;
}

ExperimentReport run_experiment(int number,
                                const std::string& out_dir_override) {
  RunConfig cfg = experiment_config(number);
  if (!out_dir_override.empty()) cfg.out_dir = out_dir_override;
  const GridSet g = validate_config(cfg);

  ExperimentReport rep;
  rep.config = cfg;
  rep.outputs = execute_run(cfg);

  const CoupledState ic = initial_state(cfg, g);
  rep.steady_value = mean_steady_value(total_mass(ic, g), g, cfg.model);
  double acc = 0.0;
  for (double x : ic.u) acc += x;
  for (double x : ic.V) acc += x;
  rep.initial_node_average = acc / (ic.u.size() + ic.V.size());

  const Snapshot& last = rep.outputs.snapshots.back();
  const double vk = g.r2_measure * rep.steady_value;
  double dev = 0.0;
  for (double x : last.u) dev = std::max(dev, std::abs(x - rep.steady_value));
  for (double x : last.V) dev = std::max(dev, std::abs(x - vk));
  rep.final_max_deviation = dev;

  const bool navg_matches =
      std::abs(rep.initial_node_average - rep.steady_value) <= 0.01;
  write_outputs(
      rep.outputs, cfg, g, cfg.out_dir,
      {{"steady_value", format_double(rep.steady_value)},
       {"initial_node_average", format_double(rep.initial_node_average)},
       {"node_average_matches_steady", navg_matches ? "true" : "false"},
       {"final_max_deviation", format_double(rep.final_max_deviation)},
       {"note",
        "initial_node_average weighs every node equally; the run converges "
        "to steady_value, the quadrature-weighted mean fixed by the "
        "conservation law"}});
  return rep;
}

}  // namespace thindiff
