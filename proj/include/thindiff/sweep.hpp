#pragma once

#include <utility>
#include <vector>

#include "thindiff/stepper.hpp"

namespace thindiff {

// One row per thinness value: distance between the collapsed box field and
// the matching limit-run segment field at t_final (weighted L2), plus the
// max-norm gap of the rectangle fields.
struct SweepResult {
  std::vector<double> eps;
  std::vector<double> dist_v;
  std::vector<double> dist_u_max;
  double t_final = 0;
};

// Collapses the rescaled transverse direction by its Riemann integral
// (h2 * column sum), producing the segment field the box field converges to.
std::vector<double> average_over_r2(const std::vector<double>& v,
                                    const BoxGrid& box);

// Lifts a limit initial state to the box: v = V / r2_measure, optionally
// modulated by a per-layer transverse profile (size m2; empty means flat).
EpsState make_eps_state(const GridSet& g, const CoupledState& limit_ic,
                        double eps,
                        const std::vector<double>& transverse_profile = {});

std::pair<TimeSeries, EpsState> run_eps_problem(const GridSet& g,
                                                ModelKind kind,
                                                const Kernels& k,
                                                EpsState init,
                                                const StepPlan& plan);

// Runs the limit problem once and the eps problem per entry of eps_list from
// the same initial data and kernels, comparing final fields. An empty list
// returns an empty result.
SweepResult sweep_and_compare(const GridSet& g, ModelKind eps_kind,
                              const Kernels& k, const CoupledState& ic,
                              const std::vector<double>& eps_list,
                              double t_final, double dt,
                              const std::vector<double>& transverse_profile = {});

}  // namespace thindiff
