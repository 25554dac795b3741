#include "thindiff/grids.hpp"

#include <cmath>
#include <string>

#include "thindiff/errors.hpp"

namespace thindiff {

NodeClass RectGrid::node_class(int i, int j) const {
  const bool bx = (i == 0 || i == m - 1);
  const bool by = (j == 0 || j == n - 1);
  if (bx && by) return NodeClass::Corner;
  if (bx || by) return NodeClass::Edge;
  return NodeClass::Interior;
}

bool RectGrid::on_gamma(int i, int j) const {
  switch (gamma) {
    case Side::Bottom: return j == 0;
    case Side::Top: return j == n - 1;
    case Side::Left: return i == 0;
    case Side::Right: return i == m - 1;
  }
  return false;
}

std::vector<std::pair<int, int>> RectGrid::gamma_nodes() const {
  std::vector<std::pair<int, int>> nodes;
  if (gamma == Side::Bottom || gamma == Side::Top) {
    const int j = (gamma == Side::Bottom) ? 0 : n - 1;
    nodes.reserve(m);
    for (int i = 0; i < m; ++i) nodes.emplace_back(i, j);
  } else {
    const int i = (gamma == Side::Left) ? 0 : m - 1;
    nodes.reserve(n);
    for (int j = 0; j < n; ++j) nodes.emplace_back(i, j);
  }
  return nodes;
}

GridSet build_grids(const GridParams& p) {
  if (!(p.omega_x_lo < p.omega_x_hi) || !(p.omega_y_lo < p.omega_y_hi))
    throw config_error("rectangle bounds must satisfy lo < hi");
  if (!(p.r1_lo < p.r1_hi))
    throw config_error("segment bounds must satisfy lo < hi");
  if (!(p.r2_lo < p.r2_hi))
    throw config_error("transverse bounds must satisfy lo < hi");
  if (p.m < 3 || p.n < 3)
    throw config_error("rectangle needs at least 3 nodes per direction, got m=" +
                       std::to_string(p.m) + " n=" + std::to_string(p.n));
  if (p.m2 < 2)
    throw config_error("transverse direction needs at least 2 cells, got m2=" +
                       std::to_string(p.m2));

  const double hx = (p.omega_x_hi - p.omega_x_lo) / (p.m - 1);
  const double hy = (p.omega_y_hi - p.omega_y_lo) / (p.n - 1);
  if (std::abs(hx - hy) > 1e-12 * std::max(hx, hy))
    throw config_error("rectangle spacing must match in both directions (hx=" +
                       std::to_string(hx) + " hy=" + std::to_string(hy) + ")");

  GridSet g;
  g.omega = RectGrid{p.omega_x_lo, p.omega_x_hi, p.omega_y_lo, p.omega_y_hi,
                     p.m, p.n, hx, p.gamma};
  g.r1 = SegmentGrid{p.r1_lo, p.r1_hi, p.m, (p.r1_hi - p.r1_lo) / (p.m - 1)};
  g.box = BoxGrid{g.r1, p.r2_lo, p.r2_hi, p.m2, (p.r2_hi - p.r2_lo) / p.m2};
  g.r2_measure = (p.r2_measure < 0) ? (p.r2_hi - p.r2_lo) : p.r2_measure;
  if (!(g.r2_measure > 0)) throw config_error("r2_measure must be positive");
  return g;
}

}  // namespace thindiff
