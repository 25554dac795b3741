#pragma once

#include <functional>

#include "thindiff/diagnostics.hpp"
#include "thindiff/grids.hpp"
#include "thindiff/model.hpp"
#include "thindiff/operators.hpp"
#include "thindiff/state.hpp"

namespace thindiff {

struct StepPlan {
  double dt = 0.005;
  double t_final = 50.0;
  long record_every = 20;
  // When set, additionally bounds dt by the Gershgorin radius of the
  // assembled generator (limit kinds only).
  bool strict_stability = false;

  long n_steps() const;
};

// Explicit-step stability gate for the five-point stencil: dt <= h^2 / 4.
// Throws config_error on violation.
void check_cfl(double dt, double h);

// One forward-Euler update. Throws divergence_error naming the first
// non-finite node; step_index is only used to label that error.
CoupledState euler_step(const GridSet& g, ModelKind kind, const Kernels& k,
                        const CoupledState& s, double dt,
                        long step_index = -1);
EpsState euler_step(const GridSet& g, ModelKind kind, const Kernels& k,
                    const EpsState& s, double dt, long step_index = -1);

using RecordHook = std::function<void(long step, const CoupledState&)>;
using EpsRecordHook = std::function<void(long step, const EpsState&)>;

// Evolves the state in place over n_steps() updates, recording diagnostics
// before the first step, every record_every-th step, and after the last.
// The hook fires after every step (and once for the initial state).
TimeSeries run(const GridSet& g, ModelKind kind, const Kernels& k,
               CoupledState& state, const StepPlan& plan,
               const RecordHook& hook = {});
TimeSeries run(const GridSet& g, ModelKind kind, const Kernels& k,
               EpsState& state, const StepPlan& plan,
               const EpsRecordHook& hook = {});

}  // namespace thindiff
