#include "thindiff/stepper.hpp"

#include <cmath>
#include <string>

#include "thindiff/errors.hpp"
#include "thindiff/spectral.hpp"

namespace thindiff {

namespace {

constexpr double rel_slack = 1.0 + 1e-12;

void validate_plan(const StepPlan& plan) {
  if (!(plan.dt > 0)) throw config_error("dt must be positive");
  if (plan.t_final < 0) throw config_error("t_final must be nonnegative");
  if (plan.record_every < 1) throw config_error("record_every must be >= 1");
}

void check_gershgorin(const GridSet& g, ModelKind kind, const Kernels& k,
                      double dt) {
  if (!is_limit(kind)) return;
  const Generator gen = ops::assemble_generator(g, kind, k);
  const double radius = gen.matrix.cwiseAbs().rowwise().sum().maxCoeff();
  if (radius > 0 && dt > (2.0 / radius) * rel_slack)
    throw config_error("dt " + std::to_string(dt) +
                       " exceeds the Gershgorin stability bound " +
                       std::to_string(2.0 / radius));
}

[[noreturn]] void report_divergence(const char* field, long flat, long step) {
  throw divergence_error(std::string("non-finite value in ") + field +
                             " at flat node " + std::to_string(flat) +
                             (step >= 0 ? " after step " + std::to_string(step)
                                        : std::string()),
                         step);
}

void apply_update(const std::vector<double>& rate, double dt,
                  std::vector<double>& x, const char* field, long step) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] += dt * rate[i];
    if (!std::isfinite(x[i])) report_divergence(field, (long)i, step);
  }
}

}  // namespace

long StepPlan::n_steps() const {
  if (t_final <= 0) return 0;
  return static_cast<long>(std::ceil(t_final / dt - 1e-9));
}

void check_cfl(double dt, double h) {
  const double bound = h * h / 4.0;
  if (dt > bound * rel_slack)
    throw config_error("dt " + std::to_string(dt) +
                       " violates the explicit stability bound h^2/4 = " +
                       std::to_string(bound));
}

CoupledState euler_step(const GridSet& g, ModelKind kind, const Kernels& k,
                        const CoupledState& s, double dt, long step_index) {
  const CoupledState rate = ops::rhs(g, kind, k, s);
  CoupledState out = s;
  out.t = s.t + dt;
  apply_update(rate.u, dt, out.u, "u", step_index);
  apply_update(rate.V, dt, out.V, "V", step_index);
  return out;
}

EpsState euler_step(const GridSet& g, ModelKind kind, const Kernels& k,
                    const EpsState& s, double dt, long step_index) {
  const EpsState rate = ops::rhs(g, kind, k, s);
  EpsState out = s;
  out.t = s.t + dt;
  apply_update(rate.u, dt, out.u, "u", step_index);
  apply_update(rate.v, dt, out.v, "v", step_index);
  return out;
}

namespace {

// Shared run loop: State is CoupledState or EpsState.
template <class State, class Hook>
TimeSeries run_impl(const GridSet& g, ModelKind kind, const Kernels& k,
                    State& state, const StepPlan& plan, const Hook& hook) {
  validate_plan(plan);
  check_cfl(plan.dt, g.omega.h);
  if (plan.strict_stability) check_gershgorin(g, kind, k, plan.dt);

  const long steps = plan.n_steps();
  const double t0 = state.t;
  TimeSeries ts;
  ts.ledger.start(total_mass(state, g));

  const auto record = [&] {
    ts.t.push_back(state.t);
    ts.mass.push_back(total_mass(state, g));
    ts.distance.push_back(distance_to_steady(state, g, kind));
    ts.energy.push_back(energy(state, g, k, kind));
  };

  record();
  if (hook) hook(0, state);
  for (long l = 1; l <= steps; ++l) {
    state = euler_step(g, kind, k, state, plan.dt, l);
    state.t = t0 + l * plan.dt;
    ts.ledger.record(total_mass(state, g));
    if (l % plan.record_every == 0 || l == steps) record();
    if (hook) hook(l, state);
  }
  return ts;
}

}  // namespace

TimeSeries run(const GridSet& g, ModelKind kind, const Kernels& k,
               CoupledState& state, const StepPlan& plan,
               const RecordHook& hook) {
  if (!is_limit(kind))
    throw config_error("run: coupled state requires a limit kind");
  return run_impl(g, kind, k, state, plan, hook);
}

TimeSeries run(const GridSet& g, ModelKind kind, const Kernels& k,
               EpsState& state, const StepPlan& plan,
               const EpsRecordHook& hook) {
  if (!is_eps(kind)) throw config_error("run: eps state requires an eps kind");
  return run_impl(g, kind, k, state, plan, hook);
}

}  // namespace thindiff
