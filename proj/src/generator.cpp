#include <stdexcept>

#include "thindiff/operators.hpp"

namespace thindiff {

Eigen::VectorXd Generator::kernel_vector() const {
  Eigen::VectorXd k(size());
  k.head(n_omega).setOnes();
  k.tail(n_r1).setConstant(r2_measure);
  return k;
}

namespace ops {

Generator assemble_generator(const GridSet& gs, ModelKind kind,
                             const Kernels& ks) {
  if (!is_limit(kind))
    throw std::invalid_argument("assemble_generator: requires a limit kind");
  const int nu = gs.omega.size();
  const int nv = gs.r1.m;
  const int n = nu + nv;

  Generator gen;
  gen.matrix.resize(n, n);
  gen.weights.resize(n);
  gen.n_omega = nu;
  gen.n_r1 = nv;
  gen.r2_measure = gs.r2_measure;

  CoupledState e;
  e.u.assign(nu, 0.0);
  e.V.assign(nv, 0.0);
  for (int c = 0; c < n; ++c) {
    double& slot = (c < nu) ? e.u[c] : e.V[c - nu];
    slot = 1.0;
    const CoupledState col = ref::rhs(gs, kind, ks, e);
    for (int i = 0; i < nu; ++i) gen.matrix(i, c) = col.u[i];
    for (int k = 0; k < nv; ++k) gen.matrix(nu + k, c) = col.V[k];
    slot = 0.0;
  }

  const double wu = gs.r2_measure * gs.omega.h * gs.omega.h;
  gen.weights.head(nu).setConstant(wu);
  gen.weights.tail(nv).setConstant(gs.r1.h);
  return gen;
}

}  // namespace ops
}  // namespace thindiff
