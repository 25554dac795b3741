#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "thindiff/grids.hpp"
#include "thindiff/kernels.hpp"
#include "thindiff/model.hpp"
#include "thindiff/operators.hpp"
#include "thindiff/state.hpp"

// Per-node rate computations shared by the serial reference drivers and the
// OpenMP drivers. Keeping a single body per node guarantees both backends
// produce bitwise-identical fields for any thread count; inner sums always
// run in ascending node order.

namespace thindiff::ops::detail {

// Five-point stencil with zero-flux closure: a missing neighbor drops out of
// both the sum and the center count.
inline double lap_node(const RectGrid& g, const std::vector<double>& u, int i,
                       int j) {
  double acc = 0.0;
  int cnt = 0;
  if (i > 0) { acc += u[g.idx(i - 1, j)]; ++cnt; }
  if (i + 1 < g.m) { acc += u[g.idx(i + 1, j)]; ++cnt; }
  if (j > 0) { acc += u[g.idx(i, j - 1)]; ++cnt; }
  if (j + 1 < g.n) { acc += u[g.idx(i, j + 1)]; ++cnt; }
  return (acc - cnt * u[g.idx(i, j)]) / (g.h * g.h);
}

inline double nonlocal_node(const SegmentGrid& g, const KernelSpec& j,
                            double r2_measure, const std::vector<double>& V,
                            int k) {
  const double zk = g.z(k);
  const double vk = V[k];
  double acc = 0.0;
  for (int p = 0; p < g.m; ++p) acc += eval_line(j, zk - g.z(p)) * (V[p] - vk);
  return r2_measure * g.h * acc;
}

// Volume coupling gain on the rectangle; interior nodes only, mirroring the
// index range of the segment-side loss so the weighted totals cancel.
inline double couple_src_u_node(const GridSet& gs, const KernelSpec& gk,
                                const std::vector<double>& u,
                                const std::vector<double>& V, int i, int j) {
  if (gs.omega.node_class(i, j) != NodeClass::Interior) return 0.0;
  const double xi = gs.omega.x(i);
  const double yj = gs.omega.y(j);
  const double ui = u[gs.omega.idx(i, j)];
  double acc = 0.0;
  for (int k = 0; k < gs.r1.m; ++k)
    acc += limit_slice(gk, xi - gs.r1.z(k), yj) * (V[k] - gs.r2_measure * ui);
  return gs.r1.h * acc;
}

inline double couple_src_V_node(const GridSet& gs, const KernelSpec& gk,
                                const std::vector<double>& u,
                                const std::vector<double>& V, int k) {
  const double zk = gs.r1.z(k);
  const double vk = V[k];
  double acc = 0.0;
  for (int j = 1; j + 1 < gs.omega.n; ++j)
    for (int i = 1; i + 1 < gs.omega.m; ++i)
      acc += limit_slice(gk, gs.omega.x(i) - zk, gs.omega.y(j)) *
             (vk - gs.r2_measure * u[gs.omega.idx(i, j)]);
  return -(gs.omega.h * gs.omega.h) * acc;
}

// Flux coupling gain on the coupled side. The h_segment/h_rect factor makes
// the weighted totals cancel against the segment-side loss for any grid pair
// and collapses to 1 when both spacings coincide.
inline double couple_bdy_u_node(const GridSet& gs, const KernelSpec& gk,
                                const std::vector<double>& u,
                                const std::vector<double>& V, int i, int j) {
  if (!gs.omega.on_gamma(i, j)) return 0.0;
  const double xi = gs.omega.x(i);
  const double yj = gs.omega.y(j);
  const double ui = u[gs.omega.idx(i, j)];
  double acc = 0.0;
  for (int k = 0; k < gs.r1.m; ++k)
    acc += limit_slice(gk, xi - gs.r1.z(k), yj) * (V[k] - gs.r2_measure * ui);
  return (gs.r1.h / gs.omega.h) * acc;
}

inline double couple_bdy_V_node(const GridSet& gs, const KernelSpec& gk,
                                const std::vector<double>& u,
                                const std::vector<double>& V,
                                const std::vector<std::pair<int, int>>& gamma,
                                int k) {
  const double zk = gs.r1.z(k);
  const double vk = V[k];
  double acc = 0.0;
  for (const auto& [i, j] : gamma)
    acc += limit_slice(gk, gs.omega.x(i) - zk, gs.omega.y(j)) *
           (vk - gs.r2_measure * u[gs.omega.idx(i, j)]);
  return -gs.omega.h * acc;
}

inline double couple_eps_src_u_node(const GridSet& gs, const KernelSpec& gk,
                                    const std::vector<double>& u,
                                    const std::vector<double>& v, double eps,
                                    int i, int j) {
  if (gs.omega.node_class(i, j) != NodeClass::Interior) return 0.0;
  const BoxGrid& b = gs.box;
  const double xi = gs.omega.x(i);
  const double yj = gs.omega.y(j);
  const double ui = u[gs.omega.idx(i, j)];
  double acc = 0.0;
  for (int q = 0; q < b.m2; ++q) {
    const double x2q = b.x2(q);
    for (int k = 0; k < b.r1.m; ++k)
      acc += eval_scaled(gk, xi - b.r1.z(k), yj, x2q, KernelMode::GEpsSourceU,
                         eps) *
             (v[b.idx(k, q)] - ui);
  }
  return b.r1.h * b.h2 * acc;
}

inline double couple_eps_bdy_u_node(const GridSet& gs, const KernelSpec& gk,
                                    const std::vector<double>& u,
                                    const std::vector<double>& v, double eps,
                                    int i, int j) {
  if (!gs.omega.on_gamma(i, j)) return 0.0;
  const BoxGrid& b = gs.box;
  const double xi = gs.omega.x(i);
  const double yj = gs.omega.y(j);
  const double ui = u[gs.omega.idx(i, j)];
  double acc = 0.0;
  for (int q = 0; q < b.m2; ++q) {
    const double x2q = b.x2(q);
    for (int k = 0; k < b.r1.m; ++k)
      acc += eval_scaled(gk, xi - b.r1.z(k), yj, x2q, KernelMode::GEpsBoundary,
                         eps) *
             (v[b.idx(k, q)] - ui);
  }
  return b.h2 * (b.r1.h / gs.omega.h) * acc;
}

inline double eps_v_node(const GridSet& gs, ModelKind kind, const Kernels& ks,
                         const std::vector<double>& u,
                         const std::vector<double>& v,
                         const std::vector<std::pair<int, int>>& gamma,
                         double eps, int k, int q) {
  const BoxGrid& b = gs.box;
  const RectGrid& om = gs.omega;
  const double zk = b.r1.z(k);
  const double x2q = b.x2(q);
  const double vkq = v[b.idx(k, q)];

  double accj = 0.0;
  for (int r = 0; r < b.m2; ++r) {
    const double x2r = b.x2(r);
    for (int p = 0; p < b.r1.m; ++p)
      accj += eval_scaled(ks.j, zk - b.r1.z(p), x2q, x2r, KernelMode::JEps,
                          eps) *
              (v[b.idx(p, r)] - vkq);
  }
  double rate = b.r1.h * b.h2 * accj;

  if (kind == ModelKind::EpsSource) {
    double acc = 0.0;
    for (int j = 1; j + 1 < om.n; ++j)
      for (int i = 1; i + 1 < om.m; ++i)
        acc += eval_scaled(ks.g, om.x(i) - zk, x2q, om.y(j),
                           KernelMode::GEpsSourceV, eps) *
               (vkq - u[om.idx(i, j)]);
    rate -= om.h * om.h * acc;
  } else {
    double acc = 0.0;
    for (const auto& [i, j] : gamma)
      acc += eval_scaled(ks.g, om.x(i) - zk, x2q, om.y(j),
                         KernelMode::GEpsSourceV, eps) *
             (vkq - u[om.idx(i, j)]);
    rate -= om.h * acc;
  }
  return rate;
}

inline void require_rect_field(const RectGrid& g, const std::vector<double>& u,
                               const char* what) {
  if (static_cast<int>(u.size()) != g.size())
    throw std::invalid_argument(std::string(what) +
                                ": rectangle field size mismatch");
}

inline void require_segment_field(const SegmentGrid& g,
                                  const std::vector<double>& V,
                                  const char* what) {
  if (static_cast<int>(V.size()) != g.m)
    throw std::invalid_argument(std::string(what) +
                                ": segment field size mismatch");
}

inline void require_planar(const KernelSpec& k, const char* what) {
  if (is_1d(k.kind))
    throw std::invalid_argument(std::string(what) +
                                ": coupling kernel must be a planar kind");
}

inline void require_limit(const GridSet& gs, ModelKind kind,
                          const Kernels& ks, const CoupledState& s) {
  if (!is_limit(kind))
    throw std::invalid_argument("rhs: coupled state requires a limit kind");
  require_planar(ks.g, "rhs");
  require_rect_field(gs.omega, s.u, "rhs");
  require_segment_field(gs.r1, s.V, "rhs");
}

inline void require_eps(const GridSet& gs, ModelKind kind, const Kernels& ks,
                        const EpsState& s) {
  if (!is_eps(kind))
    throw std::invalid_argument("rhs: eps state requires an eps kind");
  require_planar(ks.g, "rhs");
  if (is_1d(ks.j.kind))
    throw std::invalid_argument(
        "rhs: eps problems need a planar segment kernel");
  require_rect_field(gs.omega, s.u, "rhs");
  if (static_cast<int>(s.v.size()) != gs.box.size())
    throw std::invalid_argument("rhs: box field size mismatch");
  if (!(s.eps > 0.0) || s.eps > 1.0)
    throw std::invalid_argument("rhs: state eps must lie in (0, 1]");
}

}  // namespace thindiff::ops::detail
