#pragma once

#include <numbers>

namespace thindiff {

// Radial interaction profiles. The 1D kinds act along the segment only;
// the 2D kinds act on planar offsets and are the ones the rescaled
// thin-domain problems evaluate at squeezed second coordinates.
enum class KernelKind {
  CosineHalf1D,     // amplitude * cos(d) on |d| <= support_radius
  CosineProduct2D,  // amplitude * cos(d1) * cos(d2) on the support square
  Uniform1D,        // amplitude on |d| <= support_radius
  Uniform2D,        // amplitude on the support square
};

// How eval_scaled squeezes the second coordinate before evaluating a 2D
// kernel. s2/t2 are the second coordinates of the two interaction
// endpoints; which of them lives in the rescaled transverse variable (and
// therefore picks up the factor eps) depends on the term being built.
enum class KernelMode {
  JEps,          // both endpoints transverse: d2 = eps * (s2 - t2)
  GEpsSourceU,   // rectangle equation, s2 true, t2 rescaled: d2 = s2 - eps * t2
  GEpsSourceV,   // segment equation, s2 rescaled, t2 true: d2 = eps * s2 - t2
  GEpsBoundary,  // boundary-row equation, s2 true, t2 rescaled: d2 = s2 - eps * t2
};

struct KernelSpec {
  KernelKind kind = KernelKind::CosineHalf1D;
  double amplitude = 0.5;
  double support_radius = std::numbers::pi / 2;

  bool operator==(const KernelSpec&) const = default;
};

bool is_1d(KernelKind kind);

// Stock profiles used by the reference experiments.
KernelSpec cosine_half_1d();
KernelSpec cosine_product_2d();
KernelSpec uniform_1d(double value, double radius);
KernelSpec uniform_2d(double value, double radius);

// Point evaluation. eval1 requires a 1D kind, eval2 a 2D kind; a mismatch
// throws std::invalid_argument. Support is closed: |d| <= radius evaluates
// the profile, anything outside returns exactly zero.
double eval1(const KernelSpec& k, double d);
double eval2(const KernelSpec& k, double d1, double d2);

// 2D kernel restricted to a fixed second coordinate (the dimension-reduced
// problems pair a planar point at height x2 with a segment point at height 0).
double limit_slice(const KernelSpec& k, double d1, double x2);

// Squeezed evaluation for the pre-limit problems; eps must lie in (0, 1].
double eval_scaled(const KernelSpec& k, double d1, double s2, double t2,
                   KernelMode mode, double eps);

// Evaluation along the segment: eval1 for 1D kinds, the zero-height slice
// for 2D kinds. Lets limit runs reuse the planar kernel of an eps sweep.
double eval_line(const KernelSpec& k, double d);

}  // namespace thindiff
