#pragma once

#include <vector>

#include "thindiff/grids.hpp"
#include "thindiff/model.hpp"
#include "thindiff/state.hpp"

namespace thindiff {

// Conserved-quantity bookkeeping across a run.
struct MassLedger {
  double initial = 0;
  double final = 0;
  double max_drift = 0;

  void start(double q) { initial = final = q; max_drift = 0; }
  void record(double q);
};

// Diagnostics sampled at recorded steps. The ledger tracks mass at every
// step, not just recorded ones.
struct TimeSeries {
  std::vector<double> t;
  std::vector<double> mass;
  std::vector<double> distance;
  std::vector<double> energy;
  MassLedger ledger;

  std::size_t rows() const { return t.size(); }
};

// Discrete conserved quantity: h^2 * sum(u) + h * sum(V) for limit states,
// h^2 * sum(u) + h * h2 * sum(v) for eps states.
double total_mass(const CoupledState& s, const GridSet& g);
double total_mass(const EpsState& s, const GridSet& g);

// Constant the run relaxes to, read off the conservation law. The steady
// state is u = k everywhere with the matching segment value r2_measure * k
// (limit kinds) or box value k (eps kinds).
double mean_steady_value(double mass, const GridSet& g, ModelKind kind);

// Quadrature-weighted distance to the steady state predicted by the state's
// own mass.
double distance_to_steady(const CoupledState& s, const GridSet& g,
                          ModelKind kind);
double distance_to_steady(const EpsState& s, const GridSet& g, ModelKind kind);

}  // namespace thindiff
