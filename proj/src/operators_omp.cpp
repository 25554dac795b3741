#include "operators_detail.hpp"
#include "thindiff/operators.hpp"

// OpenMP drivers over the same per-node kernels as the serial reference.
// Parallelism is one output node per iteration; every inner sum keeps its
// fixed ascending order, so the fields are identical for any thread count.

namespace thindiff::ops {

std::vector<double> laplacian_neumann(const RectGrid& g,
                                      const std::vector<double>& u) {
  detail::require_rect_field(g, u, "laplacian_neumann");
  std::vector<double> out(g.size());
#pragma omp parallel for collapse(2) schedule(static)
  for (int j = 0; j < g.n; ++j)
    for (int i = 0; i < g.m; ++i) out[g.idx(i, j)] = detail::lap_node(g, u, i, j);
  return out;
}

std::vector<double> nonlocal_diffusion(const SegmentGrid& g,
                                       const KernelSpec& j, double r2_measure,
                                       const std::vector<double>& V) {
  detail::require_segment_field(g, V, "nonlocal_diffusion");
  std::vector<double> out(g.m);
#pragma omp parallel for schedule(static)
  for (int k = 0; k < g.m; ++k)
    out[k] = detail::nonlocal_node(g, j, r2_measure, V, k);
  return out;
}

CouplingRates coupling_source(const GridSet& gs, const KernelSpec& gk,
                              const std::vector<double>& u,
                              const std::vector<double>& V) {
  detail::require_planar(gk, "coupling_source");
  detail::require_rect_field(gs.omega, u, "coupling_source");
  detail::require_segment_field(gs.r1, V, "coupling_source");
  CouplingRates out;
  out.du.resize(gs.omega.size());
  out.dV.resize(gs.r1.m);
#pragma omp parallel for collapse(2) schedule(static)
  for (int j = 0; j < gs.omega.n; ++j)
    for (int i = 0; i < gs.omega.m; ++i)
      out.du[gs.omega.idx(i, j)] =
          detail::couple_src_u_node(gs, gk, u, V, i, j);
#pragma omp parallel for schedule(static)
  for (int k = 0; k < gs.r1.m; ++k)
    out.dV[k] = detail::couple_src_V_node(gs, gk, u, V, k);
  return out;
}

CouplingRates coupling_boundary(const GridSet& gs, const KernelSpec& gk,
                                const std::vector<double>& u,
                                const std::vector<double>& V) {
  detail::require_planar(gk, "coupling_boundary");
  detail::require_rect_field(gs.omega, u, "coupling_boundary");
  detail::require_segment_field(gs.r1, V, "coupling_boundary");
  const auto gamma = gs.omega.gamma_nodes();
  CouplingRates out;
  out.du.resize(gs.omega.size());
  out.dV.resize(gs.r1.m);
#pragma omp parallel for collapse(2) schedule(static)
  for (int j = 0; j < gs.omega.n; ++j)
    for (int i = 0; i < gs.omega.m; ++i)
      out.du[gs.omega.idx(i, j)] =
          detail::couple_bdy_u_node(gs, gk, u, V, i, j);
#pragma omp parallel for schedule(static)
  for (int k = 0; k < gs.r1.m; ++k)
    out.dV[k] = detail::couple_bdy_V_node(gs, gk, u, V, gamma, k);
  return out;
}

CoupledState rhs(const GridSet& gs, ModelKind kind, const Kernels& ks,
                 const CoupledState& s) {
  detail::require_limit(gs, kind, ks, s);
  const bool src = is_source(kind);
  const auto gamma = gs.omega.gamma_nodes();
  CoupledState r;
  r.t = s.t;
  r.u.resize(gs.omega.size());
  r.V.resize(gs.r1.m);
#pragma omp parallel for collapse(2) schedule(static)
  for (int j = 0; j < gs.omega.n; ++j)
    for (int i = 0; i < gs.omega.m; ++i) {
      const double cpl =
          src ? detail::couple_src_u_node(gs, ks.g, s.u, s.V, i, j)
              : detail::couple_bdy_u_node(gs, ks.g, s.u, s.V, i, j);
      r.u[gs.omega.idx(i, j)] = detail::lap_node(gs.omega, s.u, i, j) + cpl;
    }
#pragma omp parallel for schedule(static)
  for (int k = 0; k < gs.r1.m; ++k) {
    const double cpl = src
                           ? detail::couple_src_V_node(gs, ks.g, s.u, s.V, k)
                           : detail::couple_bdy_V_node(gs, ks.g, s.u, s.V,
                                                       gamma, k);
    r.V[k] = detail::nonlocal_node(gs.r1, ks.j, gs.r2_measure, s.V, k) + cpl;
  }
  return r;
}

EpsState rhs(const GridSet& gs, ModelKind kind, const Kernels& ks,
             const EpsState& s) {
  detail::require_eps(gs, kind, ks, s);
  const bool src = (kind == ModelKind::EpsSource);
  const auto gamma = gs.omega.gamma_nodes();
  EpsState r;
  r.t = s.t;
  r.eps = s.eps;
  r.u.resize(gs.omega.size());
  r.v.resize(gs.box.size());
#pragma omp parallel for collapse(2) schedule(static)
  for (int j = 0; j < gs.omega.n; ++j)
    for (int i = 0; i < gs.omega.m; ++i) {
      const double cpl =
          src ? detail::couple_eps_src_u_node(gs, ks.g, s.u, s.v, s.eps, i, j)
              : detail::couple_eps_bdy_u_node(gs, ks.g, s.u, s.v, s.eps, i, j);
      r.u[gs.omega.idx(i, j)] = detail::lap_node(gs.omega, s.u, i, j) + cpl;
    }
#pragma omp parallel for collapse(2) schedule(static)
  for (int q = 0; q < gs.box.m2; ++q)
    for (int k = 0; k < gs.box.r1.m; ++k)
      r.v[gs.box.idx(k, q)] =
          detail::eps_v_node(gs, kind, ks, s.u, s.v, gamma, s.eps, k, q);
  return r;
}

}  // namespace thindiff::ops
