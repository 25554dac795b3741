#pragma once

#include <vector>

namespace thindiff {

// Fields of a limit problem: u on the rectangle (row-major, j outer),
// V on the segment.
struct CoupledState {
  std::vector<double> u;
  std::vector<double> V;
  double t = 0;
};

// Fields of a pre-limit problem: u on the rectangle, v on the rescaled box
// (q outer, k inner), with the thinness parameter baked into the state.
struct EpsState {
  std::vector<double> u;
  std::vector<double> v;
  double t = 0;
  double eps = 1.0;
};

}  // namespace thindiff
