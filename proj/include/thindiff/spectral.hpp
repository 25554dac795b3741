#pragma once

#include "thindiff/diagnostics.hpp"
#include "thindiff/grids.hpp"
#include "thindiff/model.hpp"
#include "thindiff/operators.hpp"
#include "thindiff/state.hpp"

namespace thindiff {

// Structural summary of an assembled generator.
struct SpectralReport {
  double lambda1 = 0;          // smallest nonzero decay rate
  double lambda_max = 0;       // largest decay rate
  double kernel_residual = 0;  // max-norm of A applied to the steady direction
  double symmetry_defect = 0;  // relative asymmetry of W*A
  int near_zero_count = 0;     // eigenvalues below the zero threshold
  int size = 0;
};

// Dissipated quadratic form of the model; nonincreasing along stable Euler
// trajectories. The quadrature weights are the ones under which the rate of
// the weighted norm equals -2 * energy.
double energy(const CoupledState& s, const GridSet& g, const Kernels& k,
              ModelKind kind);
double energy(const EpsState& s, const GridSet& g, const Kernels& k,
              ModelKind kind);

// Squared quadrature-weighted L2 norm: r2_measure * h^2 * sum(u^2) plus the
// segment (or box) term. Quadratic in the state by design.
double weighted_norm(const CoupledState& s, const GridSet& g);
double weighted_norm(const EpsState& s, const GridSet& g);

// energy / weighted_norm; requires zero weighted mass
// (r2_measure * h^2 * sum(u) + h * sum(V) = 0 within 1e-10 of the norm).
// Its infimum over mass-free states is lambda1 / 2: states converge to the
// mean at rate lambda1 while the energy carries the halves of the
// gradient-flow form.
double rayleigh_quotient(const CoupledState& s, const GridSet& g,
                         const Kernels& k, ModelKind kind);

// Dense symmetric eigensolve of the weight-similarity transform of the
// generator. Throws spectral_error unless exactly one eigenvalue sits in the
// zero band and every other decay rate is strictly positive.
SpectralReport smallest_nonzero_eigenvalue(const Generator& gen);

// Every decay rate (-eigenvalue of the generator), sorted ascending.
std::vector<double> decay_spectrum(const Generator& gen);

// Evolves the state by exp(t * A) through the eigendecomposition; the time
// oracle the Euler stepper is validated against.
CoupledState exact_evolution(const Generator& gen, const CoupledState& s,
                             double t);

// Least-squares slope of log(distance) against t over recorded rows with
// t_lo <= t <= t_hi; returns the decay rate (negated slope). Needs at least
// three rows with strictly positive distances.
double decay_rate_fit(const TimeSeries& series, double t_lo, double t_hi);

}  // namespace thindiff
