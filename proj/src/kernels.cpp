#include "thindiff/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace thindiff {

bool is_1d(KernelKind kind) {
  return kind == KernelKind::CosineHalf1D || kind == KernelKind::Uniform1D;
}

KernelSpec cosine_half_1d() {
  return {KernelKind::CosineHalf1D, 0.5, std::numbers::pi / 2};
}

KernelSpec cosine_product_2d() {
  return {KernelKind::CosineProduct2D, 0.25, std::numbers::pi / 2};
}

KernelSpec uniform_1d(double value, double radius) {
  return {KernelKind::Uniform1D, value, radius};
}

KernelSpec uniform_2d(double value, double radius) {
  return {KernelKind::Uniform2D, value, radius};
}

double eval1(const KernelSpec& k, double d) {
  if (!is_1d(k.kind))
    throw std::invalid_argument("eval1: kernel kind is planar, not 1D");
  if (std::abs(d) > k.support_radius) return 0.0;
  if (k.kind == KernelKind::Uniform1D) return k.amplitude;
  return k.amplitude * std::cos(d);
}

double eval2(const KernelSpec& k, double d1, double d2) {
  if (is_1d(k.kind))
    throw std::invalid_argument("eval2: kernel kind is 1D, not planar");
  if (std::abs(d1) > k.support_radius || std::abs(d2) > k.support_radius)
    return 0.0;
  if (k.kind == KernelKind::Uniform2D) return k.amplitude;
  return k.amplitude * std::cos(d1) * std::cos(d2);
}

double limit_slice(const KernelSpec& k, double d1, double x2) {
  return eval2(k, d1, x2);
}

double eval_scaled(const KernelSpec& k, double d1, double s2, double t2,
                   KernelMode mode, double eps) {
  if (!(eps > 0.0) || eps > 1.0)
    throw std::invalid_argument("eval_scaled: eps must lie in (0, 1]");
  switch (mode) {
    case KernelMode::JEps:
      return eval2(k, d1, eps * (s2 - t2));
    case KernelMode::GEpsSourceU:
    case KernelMode::GEpsBoundary:
      return eval2(k, d1, s2 - eps * t2);
    case KernelMode::GEpsSourceV:
      return eval2(k, d1, eps * s2 - t2);
  }
  throw std::invalid_argument("eval_scaled: unknown mode");
}

double eval_line(const KernelSpec& k, double d) {
  return is_1d(k.kind) ? eval1(k, d) : eval2(k, d, 0.0);
}

}  // namespace thindiff
