#pragma once

#include <utility>
#include <vector>

namespace thindiff {

enum class NodeClass { Interior, Edge, Corner };

// Side of the rectangle carrying the flux coupling in the boundary models.
enum class Side { Bottom, Right, Top, Left };

// Uniform node-centered grid on [x_lo, x_hi] x [y_lo, y_hi] with the same
// spacing h in both directions. Nodes are 0-based; the flat index runs
// row-major with j outer and i inner, matching the generator ordering.
struct RectGrid {
  double x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0;
  int m = 0, n = 0;
  double h = 0;
  Side gamma = Side::Top;

  double x(int i) const { return x_lo + i * h; }
  double y(int j) const { return y_lo + j * h; }
  int idx(int i, int j) const { return j * m + i; }
  int size() const { return m * n; }

  NodeClass node_class(int i, int j) const;
  bool on_gamma(int i, int j) const;
  // Coupled-side nodes in ascending order along the side, corners included.
  std::vector<std::pair<int, int>> gamma_nodes() const;
};

// Uniform grid of the segment, endpoints included.
struct SegmentGrid {
  double lo = 0, hi = 0;
  int m = 0;
  double h = 0;

  double z(int k) const { return lo + k * h; }
};

// Segment grid extended by the rescaled transverse direction. The
// transverse nodes follow the left-endpoint rule: m2 cells of width h2,
// sampled at their left edges. Flat index runs q outer, k inner.
struct BoxGrid {
  SegmentGrid r1;
  double r2_lo = 0, r2_hi = 0;
  int m2 = 0;
  double h2 = 0;

  double x2(int q) const { return r2_lo + q * h2; }
  int idx(int k, int q) const { return q * r1.m + k; }
  int size() const { return r1.m * m2; }
};

struct GridSet {
  RectGrid omega;
  SegmentGrid r1;
  BoxGrid box;
  // Transverse measure weighting the dimension-reduced coupling; defaults
  // to the transverse length but can be overridden.
  double r2_measure = 1.0;
};

struct GridParams {
  double omega_x_lo = -1, omega_x_hi = 1, omega_y_lo = -1, omega_y_hi = 1;
  double r1_lo = 1, r1_hi = 3;
  double r2_lo = 0, r2_hi = 1;
  int m = 11, n = 11, m2 = 8;
  Side gamma = Side::Top;
  // Negative means "use the transverse length".
  double r2_measure = -1.0;

  bool operator==(const GridParams&) const = default;
};

// Validates bounds, node counts, and the equal-spacing requirement of the
// five-point stencil; throws config_error on violations.
GridSet build_grids(const GridParams& p);

}  // namespace thindiff
