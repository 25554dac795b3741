#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <vector>

#include "thindiff/config.hpp"
#include "thindiff/diagnostics.hpp"
#include "thindiff/errors.hpp"
#include "thindiff/grids.hpp"
#include "thindiff/operators.hpp"
#include "thindiff/spectral.hpp"

using namespace thindiff;
using doctest::Approx;

namespace {

Kernels limit_kernels() {
  RunConfig cfg;
  return kernels_from(cfg);
}

Kernels planar_kernels() {
  RunConfig cfg;
  cfg.kernel_j = cfg.kernel_g;  // rescaled problems need a planar exchange kernel
  return kernels_from(cfg);
}

std::vector<double> random_vec(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

double sum(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s;
}

double dot_limit(const CoupledState& a, const CoupledState& b,
                 const GridSet& g) {
  double su = 0.0, sv = 0.0;
  for (std::size_t i = 0; i < a.u.size(); ++i) su += a.u[i] * b.u[i];
  for (std::size_t k = 0; k < a.V.size(); ++k) sv += a.V[k] * b.V[k];
  const double h = g.omega.h;
  return g.r2_measure * h * h * su + g.r1.h * sv;
}

double dot_eps(const EpsState& a, const EpsState& b, const GridSet& g) {
  double su = 0.0, sv = 0.0;
  for (std::size_t i = 0; i < a.u.size(); ++i) su += a.u[i] * b.u[i];
  for (std::size_t k = 0; k < a.v.size(); ++k) sv += a.v[k] * b.v[k];
  const double h = g.omega.h;
  return h * h * su + g.r1.h * g.box.h2 * sv;
}

void remove_weighted_mass(CoupledState& s, const GridSet& g) {
  const double h = g.omega.h;
  const double q = g.r2_measure * h * h * sum(s.u) + g.r1.h * sum(s.V);
  const double denom = g.r2_measure * (h * h * static_cast<double>(s.u.size()) +
                                       g.r1.h * static_cast<double>(s.V.size()));
  const double c = q / denom;
  for (auto& x : s.u) x -= c;
  for (auto& x : s.V) x -= g.r2_measure * c;
}

// Segment-only generator with full-coverage uniform exchange at strength c:
// every pair interacts equally, so the nonzero decay rate is m * c * h with
// multiplicity m - 1.
Generator rank_one_generator(double c) {
  const int m = 11;
  const double h = 0.2;
  Generator gen;
  gen.n_omega = 0;
  gen.n_r1 = m;
  gen.r2_measure = 1.0;
  gen.matrix = c * h *
               (Eigen::MatrixXd::Ones(m, m) -
                static_cast<double>(m) * Eigen::MatrixXd::Identity(m, m));
  gen.weights = Eigen::VectorXd::Constant(m, h);
  return gen;
}

}  // namespace

TEST_CASE("weighted norms recover the quadrature by hand") {
  const GridSet g = build_grids(GridParams{});

  CoupledState s;
  s.u.assign(g.omega.size(), 1.0);
  s.V.assign(g.r1.m, 0.0);
  CHECK(weighted_norm(s, g) == Approx(4.84).epsilon(1e-14));  // 0.04 * 121

  CoupledState zero;
  zero.u.assign(g.omega.size(), 0.0);
  zero.V.assign(g.r1.m, 0.0);
  CHECK(weighted_norm(zero, g) == 0.0);

  // The squared norm is quadratic in the state.
  CoupledState scaled = s;
  for (auto& x : scaled.u) x *= 3.0;
  CHECK(weighted_norm(scaled, g) ==
        Approx(9.0 * weighted_norm(s, g)).epsilon(1e-14));

  EpsState e;
  e.u.assign(g.omega.size(), 0.0);
  e.v.assign(g.box.size(), 1.0);
  CHECK(weighted_norm(e, g) ==
        Approx(2.2).epsilon(1e-14));  // 0.2 * 0.125 * 88
}

TEST_CASE("energy vanishes exactly on steady states") {
  const GridSet g = build_grids(GridParams{});
  const Kernels kl = limit_kernels();
  const Kernels kp = planar_kernels();

  CoupledState s;
  s.u.assign(g.omega.size(), 0.3125);
  s.V.assign(g.r1.m, g.r2_measure * 0.3125);
  CHECK(energy(s, g, kl, ModelKind::LimitSource) == 0.0);
  CHECK(energy(s, g, kl, ModelKind::LimitBoundary) == 0.0);

  EpsState e;
  e.u.assign(g.omega.size(), 0.3125);
  e.v.assign(g.box.size(), 0.3125);
  e.eps = 0.4;
  CHECK(energy(e, g, kp, ModelKind::EpsSource) == 0.0);
  CHECK(energy(e, g, kp, ModelKind::EpsBoundary) == 0.0);
}

TEST_CASE("the weighted rate of change of the norm is minus twice the energy") {
  const GridSet g = build_grids(GridParams{});
  const Kernels kl = limit_kernels();
  std::mt19937 rng(7);

  for (ModelKind kind : {ModelKind::LimitSource, ModelKind::LimitBoundary}) {
    for (int trial = 0; trial < 4; ++trial) {
      CoupledState w;
      w.u = random_vec(rng, g.omega.size());
      w.V = random_vec(rng, static_cast<std::size_t>(g.r1.m));
      const CoupledState dw = ops::rhs(g, kind, kl, w);
      const double lhs = dot_limit(w, dw, g);
      const double e = energy(w, g, kl, kind);
      CHECK(e >= 0.0);
      CHECK(lhs == Approx(-2.0 * e).epsilon(1e-10));
    }
  }
}

TEST_CASE("the same identity holds for the rescaled problems") {
  const GridSet g = build_grids(GridParams{});
  const Kernels kp = planar_kernels();
  std::mt19937 rng(11);

  for (ModelKind kind : {ModelKind::EpsSource, ModelKind::EpsBoundary}) {
    for (double eps : {1.0, 0.4}) {
      EpsState w;
      w.u = random_vec(rng, g.omega.size());
      w.v = random_vec(rng, g.box.size());
      w.eps = eps;
      const EpsState dw = ops::rhs(g, kind, kp, w);
      const double lhs = dot_eps(w, dw, g);
      const double e = energy(w, g, kp, kind);
      CHECK(e >= 0.0);
      CHECK(lhs == Approx(-2.0 * e).epsilon(1e-10));
    }
  }
}

TEST_CASE("the identity survives a wider transverse interval") {
  GridParams p;
  p.r2_lo = -0.5;
  p.r2_hi = 1.5;
  const GridSet g = build_grids(p);
  const Kernels kl = limit_kernels();
  std::mt19937 rng(13);

  CoupledState w;
  w.u = random_vec(rng, g.omega.size());
  w.V = random_vec(rng, static_cast<std::size_t>(g.r1.m));
  const CoupledState dw = ops::rhs(g, ModelKind::LimitSource, kl, w);
  CHECK(dot_limit(w, dw, g) ==
        Approx(-2.0 * energy(w, g, kl, ModelKind::LimitSource)).epsilon(1e-10));
}

TEST_CASE("rayleigh quotients of mass-free states never undercut lambda1") {
  const GridSet g = build_grids(GridParams{});
  const Kernels kl = limit_kernels();
  const Generator gen = ops::assemble_generator(g, ModelKind::LimitSource, kl);
  const double lambda1 = smallest_nonzero_eigenvalue(gen).lambda1;
  std::mt19937 rng(17);

  for (int trial = 0; trial < 50; ++trial) {
    CoupledState w;
    w.u = random_vec(rng, g.omega.size());
    w.V = random_vec(rng, static_cast<std::size_t>(g.r1.m));
    remove_weighted_mass(w, g);
    const double rq = rayleigh_quotient(w, g, kl, ModelKind::LimitSource);
    CHECK(rq >= lambda1 * (1.0 - 1e-8));
  }
}

TEST_CASE("the rayleigh quotient falls to half the gap along the flow") {
  const GridSet g = build_grids(GridParams{});
  const Kernels kl = limit_kernels();
  const Generator gen = ops::assemble_generator(g, ModelKind::LimitSource, kl);
  const double lambda1 = smallest_nonzero_eigenvalue(gen).lambda1;

  std::mt19937 rng(19);
  CoupledState w;
  w.u = random_vec(rng, g.omega.size());
  w.V = random_vec(rng, static_cast<std::size_t>(g.r1.m));
  remove_weighted_mass(w, g);

  const double r0 = rayleigh_quotient(w, g, kl, ModelKind::LimitSource);
  const CoupledState w1 = exact_evolution(gen, w, 5.0);
  const double r1 = rayleigh_quotient(w1, g, kl, ModelKind::LimitSource);
  const CoupledState w2 = exact_evolution(gen, w, 60.0);
  const double r2 = rayleigh_quotient(w2, g, kl, ModelKind::LimitSource);

  CHECK(r1 <= r0 * (1.0 + 1e-12));
  CHECK(r2 <= r1 * (1.0 + 1e-12));
  // The flow projects onto the slowest mode, where the quotient is exactly
  // half the decay rate (the energy keeps the gradient-flow halves while the
  // norm decays at the full rate lambda1).
  CHECK(r2 >= 0.5 * lambda1 * (1.0 - 1e-8));
  CHECK(r2 == Approx(0.5 * lambda1).epsilon(1e-2));
}

TEST_CASE("rayleigh preconditions") {
  const GridSet g = build_grids(GridParams{});
  const Kernels kl = limit_kernels();

  CoupledState zero;
  zero.u.assign(g.omega.size(), 0.0);
  zero.V.assign(g.r1.m, 0.0);
  CHECK_THROWS_AS(
      (void)rayleigh_quotient(zero, g, kl, ModelKind::LimitSource),
      std::invalid_argument);

  CoupledState massive;
  massive.u.assign(g.omega.size(), 1.0);
  massive.V.assign(g.r1.m, 1.0);
  CHECK_THROWS_AS(
      (void)rayleigh_quotient(massive, g, kl, ModelKind::LimitSource),
      std::invalid_argument);
}

TEST_CASE("spectral gaps of the assembled stock generators") {
  const GridSet g = build_grids(GridParams{});
  const Kernels kl = limit_kernels();

  const SpectralReport src =
      smallest_nonzero_eigenvalue(
          ops::assemble_generator(g, ModelKind::LimitSource, kl));
  CHECK(src.size == 132);
  CHECK(src.near_zero_count == 1);
  CHECK(src.symmetry_defect <= 1e-12);
  CHECK(src.kernel_residual <= 1e-12);
  CHECK(src.lambda1 == Approx(0.09735241898465383).epsilon(1e-9));
  CHECK(src.lambda_max > src.lambda1);

  const SpectralReport top =
      smallest_nonzero_eigenvalue(
          ops::assemble_generator(g, ModelKind::LimitBoundary, kl));
  CHECK(top.lambda1 == Approx(0.056672032026700916).epsilon(1e-9));

  GridParams pr;
  pr.gamma = Side::Right;
  const GridSet gr = build_grids(pr);
  const SpectralReport right =
      smallest_nonzero_eigenvalue(
          ops::assemble_generator(gr, ModelKind::LimitBoundary, kl));
  CHECK(right.lambda1 == Approx(0.18118436329558735).epsilon(1e-9));

  // The side touching the segment relaxes three times faster than the
  // opposite one; the interior source beats the far side too.
  CHECK(right.lambda1 > src.lambda1);
  CHECK(src.lambda1 > top.lambda1);
}

TEST_CASE("full-coverage exchange generator has one flat decay band") {
  const Generator gen = rank_one_generator(0.7);
  const SpectralReport rep = smallest_nonzero_eigenvalue(gen);
  CHECK(rep.size == 11);
  CHECK(rep.near_zero_count == 1);
  CHECK(rep.symmetry_defect <= 1e-14);
  CHECK(rep.kernel_residual <= 1e-13);
  CHECK(rep.lambda1 == Approx(11 * 0.7 * 0.2).epsilon(1e-12));
  CHECK(rep.lambda_max == Approx(11 * 0.7 * 0.2).epsilon(1e-12));

  // Decay rates scale linearly with the exchange strength.
  CHECK(smallest_nonzero_eigenvalue(rank_one_generator(1.4)).lambda1 ==
        Approx(2 * rep.lambda1).epsilon(1e-12));

  const std::vector<double> rates = decay_spectrum(gen);
  REQUIRE(rates.size() == 11);
  CHECK(std::abs(rates[0]) <= 1e-12);
  for (std::size_t i = 1; i < rates.size(); ++i) {
    CHECK(rates[i] >= rates[i - 1]);
    CHECK(rates[i] == Approx(1.54).epsilon(1e-12));
  }
}

TEST_CASE("decay spectrum agrees with the structural report") {
  const GridSet g = build_grids(GridParams{});
  const Kernels kl = limit_kernels();
  const Generator gen = ops::assemble_generator(g, ModelKind::LimitSource, kl);
  const SpectralReport rep = smallest_nonzero_eigenvalue(gen);
  const std::vector<double> rates = decay_spectrum(gen);

  REQUIRE(rates.size() == 132);
  CHECK(std::abs(rates[0]) <= 1e-10 * rates.back());
  CHECK(rates[1] == Approx(rep.lambda1).epsilon(1e-12));
  CHECK(rates.back() == Approx(rep.lambda_max).epsilon(1e-12));
  for (std::size_t i = 1; i < rates.size(); ++i)
    CHECK(rates[i] >= rates[i - 1]);
}

TEST_CASE("a severed coupling leaves two conserved quantities") {
  const GridSet g = build_grids(GridParams{});
  Kernels k = limit_kernels();
  k.g.amplitude = 0.0;
  const Generator gen = ops::assemble_generator(g, ModelKind::LimitSource, k);
  CHECK_THROWS_AS((void)smallest_nonzero_eigenvalue(gen), spectral_error);
}

TEST_CASE("a growing mode is rejected") {
  Generator gen;
  gen.n_omega = 0;
  gen.n_r1 = 2;
  gen.matrix.resize(2, 2);
  gen.matrix << 1.0, -1.0, -1.0, 1.0;  // eigenvalues 0 and +2
  gen.weights = Eigen::VectorXd::Ones(2);
  CHECK_THROWS_AS((void)smallest_nonzero_eigenvalue(gen), spectral_error);
}

TEST_CASE("empty generators are rejected") {
  Generator gen;
  CHECK_THROWS_AS((void)smallest_nonzero_eigenvalue(gen),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)decay_spectrum(gen), std::invalid_argument);
}

TEST_CASE("the generator is affine in the coupling amplitude") {
  const GridSet g = build_grids(GridParams{});
  Kernels k = limit_kernels();
  k.g.amplitude = 0.0;
  const Generator a0 = ops::assemble_generator(g, ModelKind::LimitSource, k);
  k.g.amplitude = 0.3;
  const Generator a1 = ops::assemble_generator(g, ModelKind::LimitSource, k);
  k.g.amplitude = 0.6;
  const Generator a2 = ops::assemble_generator(g, ModelKind::LimitSource, k);

  const double scale = a2.matrix.cwiseAbs().maxCoeff();
  const double gap =
      (a2.matrix + a0.matrix - 2.0 * a1.matrix).cwiseAbs().maxCoeff();
  CHECK(gap <= 1e-13 * scale);
}

TEST_CASE("exact evolution: identity, steady state, clock") {
  const GridSet g = build_grids(GridParams{});
  const Kernels kl = limit_kernels();
  const Generator gen = ops::assemble_generator(g, ModelKind::LimitSource, kl);

  std::mt19937 rng(23);
  CoupledState s;
  s.u = random_vec(rng, g.omega.size());
  s.V = random_vec(rng, static_cast<std::size_t>(g.r1.m));
  s.t = 1.5;

  const CoupledState same = exact_evolution(gen, s, 0.0);
  CHECK(same.t == 1.5);
  for (std::size_t i = 0; i < s.u.size(); ++i)
    CHECK(same.u[i] == Approx(s.u[i]).epsilon(1e-11).scale(1.0));
  for (std::size_t k = 0; k < s.V.size(); ++k)
    CHECK(same.V[k] == Approx(s.V[k]).epsilon(1e-11).scale(1.0));

  CoupledState steady;
  steady.u.assign(g.omega.size(), 0.3125);
  steady.V.assign(g.r1.m, 0.3125);
  const CoupledState still = exact_evolution(gen, steady, 3.0);
  CHECK(still.t == 3.0);
  for (double x : still.u) CHECK(x == Approx(0.3125).epsilon(1e-11));
  for (double x : still.V) CHECK(x == Approx(0.3125).epsilon(1e-11));
}

TEST_CASE("exact evolution: linearity, semigroup, conservation") {
  const GridSet g = build_grids(GridParams{});
  const Kernels kl = limit_kernels();
  const Generator gen = ops::assemble_generator(g, ModelKind::LimitSource, kl);

  std::mt19937 rng(29);
  CoupledState w1, w2;
  w1.u = random_vec(rng, g.omega.size());
  w1.V = random_vec(rng, static_cast<std::size_t>(g.r1.m));
  w2.u = random_vec(rng, g.omega.size());
  w2.V = random_vec(rng, static_cast<std::size_t>(g.r1.m));

  CoupledState mix;
  mix.u.resize(w1.u.size());
  mix.V.resize(w1.V.size());
  for (std::size_t i = 0; i < mix.u.size(); ++i)
    mix.u[i] = 2.0 * w1.u[i] + w2.u[i];
  for (std::size_t k = 0; k < mix.V.size(); ++k)
    mix.V[k] = 2.0 * w1.V[k] + w2.V[k];

  const CoupledState e1 = exact_evolution(gen, w1, 0.7);
  const CoupledState e2 = exact_evolution(gen, w2, 0.7);
  const CoupledState em = exact_evolution(gen, mix, 0.7);
  for (std::size_t i = 0; i < em.u.size(); ++i)
    CHECK(em.u[i] ==
          Approx(2.0 * e1.u[i] + e2.u[i]).epsilon(1e-10).scale(1.0));
  for (std::size_t k = 0; k < em.V.size(); ++k)
    CHECK(em.V[k] ==
          Approx(2.0 * e1.V[k] + e2.V[k]).epsilon(1e-10).scale(1.0));

  const CoupledState two_hops = exact_evolution(gen, e1, 0.5);
  const CoupledState one_hop = exact_evolution(gen, w1, 1.2);
  CHECK(two_hops.t == Approx(1.2).epsilon(1e-15));
  for (std::size_t i = 0; i < one_hop.u.size(); ++i)
    CHECK(two_hops.u[i] == Approx(one_hop.u[i]).epsilon(1e-10).scale(1.0));
  for (std::size_t k = 0; k < one_hop.V.size(); ++k)
    CHECK(two_hops.V[k] == Approx(one_hop.V[k]).epsilon(1e-10).scale(1.0));

  CHECK(total_mass(one_hop, g) ==
        Approx(total_mass(w1, g)).epsilon(1e-12).scale(1.0));
}

TEST_CASE("exact evolution rejects mismatched states") {
  const GridSet g = build_grids(GridParams{});
  const Generator gen =
      ops::assemble_generator(g, ModelKind::LimitSource, limit_kernels());
  CoupledState bad;
  bad.u.assign(g.omega.size() - 1, 0.0);
  bad.V.assign(g.r1.m, 0.0);
  CHECK_THROWS_AS((void)exact_evolution(gen, bad, 1.0), std::invalid_argument);
}

TEST_CASE("decay rate fit recovers a synthetic exponential") {
  TimeSeries series;
  for (int r = 0; r <= 20; ++r) {
    const double t = 0.5 * r;
    series.t.push_back(t);
    series.mass.push_back(1.0);
    series.distance.push_back(5.0 * std::exp(-3.0 * t));
    series.energy.push_back(0.0);
  }
  CHECK(decay_rate_fit(series, 2.0, 8.0) == Approx(3.0).epsilon(1e-12));

  // Rows outside the window are ignored even when their distances are junk.
  series.distance.back() = 0.0;  // t = 10, outside [2, 8]
  CHECK(decay_rate_fit(series, 2.0, 8.0) == Approx(3.0).epsilon(1e-12));

  CHECK_THROWS_AS((void)decay_rate_fit(series, 8.0, 2.0),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)decay_rate_fit(series, 0.0, 0.6),  // two rows only
                  std::invalid_argument);
  series.distance[6] = 0.0;  // t = 3, inside the window
  CHECK_THROWS_AS((void)decay_rate_fit(series, 2.0, 8.0),
                  std::invalid_argument);
}

TEST_CASE("energy rejects mismatched model kinds") {
  const GridSet g = build_grids(GridParams{});
  CoupledState s;
  s.u.assign(g.omega.size(), 0.0);
  s.V.assign(g.r1.m, 1.0);
  CHECK_THROWS_AS((void)energy(s, g, limit_kernels(), ModelKind::EpsSource),
                  std::invalid_argument);
  EpsState e;
  e.u.assign(g.omega.size(), 0.0);
  e.v.assign(g.box.size(), 1.0);
  CHECK_THROWS_AS((void)energy(e, g, planar_kernels(), ModelKind::LimitSource),
                  std::invalid_argument);
}
