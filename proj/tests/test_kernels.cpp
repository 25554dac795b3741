#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "thindiff/kernels.hpp"

using namespace thindiff;
using doctest::Approx;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("segment kernel point values") {
  const KernelSpec j = cosine_half_1d();
  CHECK(eval1(j, 0.0) == Approx(0.5).epsilon(1e-15));
  CHECK(eval1(j, pi / 3) == Approx(0.25).epsilon(1e-14));
  CHECK(eval1(j, -pi / 3) == Approx(0.25).epsilon(1e-14));
  CHECK(eval1(j, 1.0) == Approx(0.5 * std::cos(1.0)).epsilon(1e-15));
  CHECK(eval1(j, 2.0) == 0.0);
  CHECK(eval1(j, -2.0) == 0.0);
  // Closed support: the edge evaluates the profile (which is ~0 there).
  CHECK(std::abs(eval1(j, pi / 2)) <= 1e-15);
  CHECK(eval1(j, std::nextafter(pi / 2, 2.0)) == 0.0);
}

TEST_CASE("planar kernel point values") {
  const KernelSpec g = cosine_product_2d();
  CHECK(eval2(g, 0.0, 0.0) == Approx(0.25).epsilon(1e-15));
  CHECK(eval2(g, pi / 3, pi / 3) == Approx(0.0625).epsilon(1e-13));
  CHECK(eval2(g, 2.0, 0.0) == 0.0);
  CHECK(eval2(g, 0.0, 2.0) == 0.0);
  CHECK(eval2(g, 0.2, 0.0) == Approx(0.25 * std::cos(0.2)).epsilon(1e-15));
  // A hand value used by the operator tests: G at (0.2, 0).
  CHECK(eval2(g, 0.2, 0.0) == Approx(0.2450166444603104).epsilon(1e-14));
}

TEST_CASE("uniform kernels are flat on their support") {
  const KernelSpec u1 = uniform_1d(0.7, 1.5);
  CHECK(eval1(u1, 0.0) == 0.7);
  CHECK(eval1(u1, 1.5) == 0.7);
  CHECK(eval1(u1, 1.5000001) == 0.0);
  const KernelSpec u2 = uniform_2d(0.3, 2.0);
  CHECK(eval2(u2, 1.9, -2.0) == 0.3);
  CHECK(eval2(u2, 2.1, 0.0) == 0.0);
}

TEST_CASE("dimension mismatches throw") {
  CHECK_THROWS_AS((void)eval1(cosine_product_2d(), 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)eval2(cosine_half_1d(), 0.0, 0.0),
                  std::invalid_argument);
}

TEST_CASE("kernel properties: symmetry, nonnegativity, compact support") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> d(-3.0, 3.0);
  const KernelSpec j = cosine_half_1d();
  const KernelSpec g = cosine_product_2d();
  for (int it = 0; it < 200; ++it) {
    const double a = d(rng), b = d(rng);
    CHECK(eval1(j, a) == eval1(j, -a));
    CHECK(eval1(j, a) >= 0.0);
    CHECK(eval2(g, a, b) == eval2(g, -a, -b));
    CHECK(eval2(g, a, b) == eval2(g, -a, b));
    CHECK(eval2(g, a, b) >= 0.0);
    if (std::abs(a) > pi / 2) {
      CHECK(eval1(j, a) == 0.0);
      CHECK(eval2(g, a, 0.0) == 0.0);
    }
  }
}

TEST_CASE("dimension-reduced slice equals the planar kernel at height x2") {
  const KernelSpec g = cosine_product_2d();
  CHECK(limit_slice(g, 0.2, 0.0) == eval2(g, 0.2, 0.0));
  CHECK(limit_slice(g, 0.4, 1.0) ==
        Approx(0.25 * std::cos(0.4) * std::cos(1.0)).epsilon(1e-15));
  CHECK(limit_slice(g, 0.4, 2.0) == 0.0);
}

TEST_CASE("segment-line evaluation dispatches on kernel dimension") {
  CHECK(eval_line(cosine_half_1d(), 0.3) ==
        Approx(0.5 * std::cos(0.3)).epsilon(1e-15));
  // A planar kernel restricted to the line is its zero-height slice.
  CHECK(eval_line(cosine_product_2d(), 0.3) ==
        Approx(0.25 * std::cos(0.3)).epsilon(1e-15));
}

TEST_CASE("squeezed evaluation recovers each coupling geometry") {
  const KernelSpec g = cosine_product_2d();
  const double eps = 0.25;
  // Both endpoints transverse: separation shrinks by eps.
  CHECK(eval_scaled(g, 0.1, 0.8, 0.2, KernelMode::JEps, eps) ==
        Approx(eval2(g, 0.1, eps * 0.6)).epsilon(1e-15));
  // Rectangle side true, box side rescaled.
  CHECK(eval_scaled(g, 0.1, 0.8, 0.2, KernelMode::GEpsSourceU, eps) ==
        Approx(eval2(g, 0.1, 0.8 - eps * 0.2)).epsilon(1e-15));
  CHECK(eval_scaled(g, 0.1, 0.8, 0.2, KernelMode::GEpsBoundary, eps) ==
        Approx(eval2(g, 0.1, 0.8 - eps * 0.2)).epsilon(1e-15));
  // Box side rescaled, rectangle side true (the segment-equation view).
  CHECK(eval_scaled(g, 0.1, 0.8, 0.2, KernelMode::GEpsSourceV, eps) ==
        Approx(eval2(g, 0.1, eps * 0.8 - 0.2)).epsilon(1e-15));
}

TEST_CASE("squeezed evaluation converges to the zero-height slice") {
  const KernelSpec g = cosine_product_2d();
  double prev = 1e300;
  for (double eps : {0.5, 0.1, 0.02}) {
    const double gap = std::abs(
        eval_scaled(g, 0.3, 0.7, 0.0, KernelMode::JEps, eps) -
        limit_slice(g, 0.3, 0.0));
    CHECK(gap < prev);
    prev = gap;
  }
  // Lipschitz-type bound: the profile moves at most amplitude * |d2| in the
  // second slot near zero (|cos'(x)| = |sin(x)| <= |x|).
  const double eps = 1e-4;
  const double gap = std::abs(
      eval_scaled(g, 0.3, 0.7, 0.0, KernelMode::JEps, eps) -
      limit_slice(g, 0.3, 0.0));
  CHECK(gap <= 0.25 * (eps * 0.7) * (eps * 0.7));
}

TEST_CASE("eps outside (0, 1] is rejected") {
  const KernelSpec g = cosine_product_2d();
  CHECK_THROWS_AS(
      (void)eval_scaled(g, 0, 0, 0, KernelMode::JEps, 0.0),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)eval_scaled(g, 0, 0, 0, KernelMode::JEps, -0.5),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)eval_scaled(g, 0, 0, 0, KernelMode::JEps, 1.5),
      std::invalid_argument);
  CHECK_NOTHROW((void)eval_scaled(g, 0, 0, 0, KernelMode::JEps, 1.0));
}

TEST_CASE("stock specs are what the experiments assume") {
  CHECK(cosine_half_1d().amplitude == 0.5);
  CHECK(cosine_half_1d().support_radius == pi / 2);
  CHECK(is_1d(cosine_half_1d().kind));
  CHECK(cosine_product_2d().amplitude == 0.25);
  CHECK(cosine_product_2d().support_radius == pi / 2);
  CHECK_FALSE(is_1d(cosine_product_2d().kind));
}
