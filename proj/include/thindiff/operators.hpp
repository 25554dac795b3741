#pragma once

#include <Eigen/Dense>
#include <vector>

#include "thindiff/grids.hpp"
#include "thindiff/kernels.hpp"
#include "thindiff/model.hpp"
#include "thindiff/state.hpp"

namespace thindiff {

struct Kernels {
  KernelSpec j;  // segment-segment exchange
  KernelSpec g;  // rectangle-segment coupling, always a planar kind
};

// Dense representation of the right-hand side of a limit problem, acting on
// the stacked vector [u; V] (rectangle nodes row-major, then segment nodes).
// weights holds the diagonal quadrature metric that symmetrizes the matrix:
// r2_measure * h^2 on rectangle entries, h on segment entries.
struct Generator {
  Eigen::MatrixXd matrix;
  Eigen::VectorXd weights;
  int n_omega = 0;
  int n_r1 = 0;
  double r2_measure = 1.0;

  int size() const { return n_omega + n_r1; }
  // The steady direction: ones on the rectangle, r2_measure on the segment.
  Eigen::VectorXd kernel_vector() const;
};

struct CouplingRates {
  std::vector<double> du;  // rectangle contribution
  std::vector<double> dV;  // segment contribution
};

namespace ops {

// Serial reference implementations, kept as the ground truth the parallel
// kernels are tested against (outputs are bitwise identical by design).
namespace ref {

std::vector<double> laplacian_neumann(const RectGrid& g,
                                      const std::vector<double>& u);
std::vector<double> nonlocal_diffusion(const SegmentGrid& g,
                                       const KernelSpec& j, double r2_measure,
                                       const std::vector<double>& V);
CouplingRates coupling_source(const GridSet& g, const KernelSpec& gk,
                              const std::vector<double>& u,
                              const std::vector<double>& V);
CouplingRates coupling_boundary(const GridSet& g, const KernelSpec& gk,
                                const std::vector<double>& u,
                                const std::vector<double>& V);
CoupledState rhs(const GridSet& g, ModelKind kind, const Kernels& k,
                 const CoupledState& s);
EpsState rhs(const GridSet& g, ModelKind kind, const Kernels& k,
             const EpsState& s);

}  // namespace ref

// OpenMP-parallel versions: one thread per output node, inner sums in fixed
// ascending order, so results do not depend on the thread count.
std::vector<double> laplacian_neumann(const RectGrid& g,
                                      const std::vector<double>& u);
std::vector<double> nonlocal_diffusion(const SegmentGrid& g,
                                       const KernelSpec& j, double r2_measure,
                                       const std::vector<double>& V);
CouplingRates coupling_source(const GridSet& g, const KernelSpec& gk,
                              const std::vector<double>& u,
                              const std::vector<double>& V);
CouplingRates coupling_boundary(const GridSet& g, const KernelSpec& gk,
                                const std::vector<double>& u,
                                const std::vector<double>& V);
CoupledState rhs(const GridSet& g, ModelKind kind, const Kernels& k,
                 const CoupledState& s);
EpsState rhs(const GridSet& g, ModelKind kind, const Kernels& k,
             const EpsState& s);

// Dense generator of a limit problem, assembled column by column from the
// reference right-hand side.
Generator assemble_generator(const GridSet& g, ModelKind kind,
                             const Kernels& k);

}  // namespace ops
}  // namespace thindiff
