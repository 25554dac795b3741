#include "thindiff/sweep.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "thindiff/errors.hpp"

namespace thindiff {

std::vector<double> average_over_r2(const std::vector<double>& v,
                                    const BoxGrid& box) {
  if (static_cast<int>(v.size()) != box.size())
    throw std::invalid_argument("average_over_r2: box field size mismatch");
  std::vector<double> out(box.r1.m, 0.0);
  for (int q = 0; q < box.m2; ++q)
    for (int k = 0; k < box.r1.m; ++k) out[k] += v[box.idx(k, q)];
  for (double& x : out) x *= box.h2;
  return out;
}

EpsState make_eps_state(const GridSet& g, const CoupledState& limit_ic,
                        double eps,
                        const std::vector<double>& transverse_profile) {
  if (static_cast<int>(limit_ic.V.size()) != g.r1.m)
    throw std::invalid_argument("make_eps_state: segment field size mismatch");
  if (!transverse_profile.empty() &&
      static_cast<int>(transverse_profile.size()) != g.box.m2)
    throw std::invalid_argument(
        "make_eps_state: transverse profile must have m2 entries");

  EpsState s;
  s.u = limit_ic.u;
  s.t = limit_ic.t;
  s.eps = eps;
  s.v.resize(g.box.size());
  for (int q = 0; q < g.box.m2; ++q) {
    const double f =
        transverse_profile.empty() ? 1.0 : transverse_profile[q];
    for (int k = 0; k < g.r1.m; ++k)
      s.v[g.box.idx(k, q)] = limit_ic.V[k] / g.r2_measure * f;
  }
  return s;
}

std::pair<TimeSeries, EpsState> run_eps_problem(const GridSet& g,
                                                ModelKind kind,
                                                const Kernels& k,
                                                EpsState init,
                                                const StepPlan& plan) {
  if (!is_eps(kind))
    throw config_error("run_eps_problem: requires an eps kind");
  TimeSeries ts = run(g, kind, k, init, plan);
  return {std::move(ts), std::move(init)};
}

SweepResult sweep_and_compare(const GridSet& g, ModelKind eps_kind,
                              const Kernels& k, const CoupledState& ic,
                              const std::vector<double>& eps_list,
                              double t_final, double dt,
                              const std::vector<double>& transverse_profile) {
  if (!is_eps(eps_kind))
    throw config_error("sweep_and_compare: requires an eps kind");
  SweepResult res;
  res.t_final = t_final;
  if (eps_list.empty()) return res;
  for (double e : eps_list)
    if (!(e > 0.0) || e > 1.0)
      throw config_error("sweep_and_compare: eps " + std::to_string(e) +
                         " outside (0, 1]");

  StepPlan plan;
  plan.dt = dt;
  plan.t_final = t_final;
  plan.record_every = std::max<long>(1, plan.n_steps());

  CoupledState limit_state = ic;
  run(g, limit_of(eps_kind), k, limit_state, plan);

  for (double e : eps_list) {
    auto [ts, final_state] = run_eps_problem(
        g, eps_kind, k, make_eps_state(g, ic, e, transverse_profile), plan);
    (void)ts;
    const std::vector<double> vbar = average_over_r2(final_state.v, g.box);

    double dv2 = 0.0;
    for (int k1 = 0; k1 < g.r1.m; ++k1) {
      const double d = vbar[k1] - limit_state.V[k1];
      dv2 += d * d;
    }
    double dumax = 0.0;
    for (std::size_t i = 0; i < final_state.u.size(); ++i)
      dumax = std::max(dumax, std::abs(final_state.u[i] - limit_state.u[i]));

    res.eps.push_back(e);
    res.dist_v.push_back(std::sqrt(g.r1.h * dv2));
    res.dist_u_max.push_back(dumax);
  }
  return res;
}

}  // namespace thindiff
