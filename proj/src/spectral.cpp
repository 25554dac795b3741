#include "thindiff/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "thindiff/errors.hpp"

namespace thindiff {

namespace {

double sum(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s;
}

// Forward-difference gradient energy: every grid edge once.
double edge_energy(const RectGrid& g, const std::vector<double>& u) {
  double acc = 0.0;
  for (int j = 0; j < g.n; ++j)
    for (int i = 0; i + 1 < g.m; ++i) {
      const double d = u[g.idx(i + 1, j)] - u[g.idx(i, j)];
      acc += d * d;
    }
  for (int j = 0; j + 1 < g.n; ++j)
    for (int i = 0; i < g.m; ++i) {
      const double d = u[g.idx(i, j + 1)] - u[g.idx(i, j)];
      acc += d * d;
    }
  return acc;
}

Eigen::MatrixXd similarity(const Generator& gen) {
  const Eigen::VectorXd sqw = gen.weights.cwiseSqrt();
  Eigen::MatrixXd s = sqw.asDiagonal() * gen.matrix *
                      sqw.cwiseInverse().asDiagonal();
  return 0.5 * (s + s.transpose());
}

}  // namespace

double energy(const CoupledState& s, const GridSet& g, const Kernels& k,
              ModelKind kind) {
  if (!is_limit(kind))
    throw std::invalid_argument("energy: coupled state requires a limit kind");
  const RectGrid& om = g.omega;
  const double hr = g.r1.h;

  double e = 0.5 * g.r2_measure * edge_energy(om, s.u);

  double jq = 0.0;
  for (int k1 = 0; k1 < g.r1.m; ++k1)
    for (int p = 0; p < g.r1.m; ++p) {
      const double d = s.V[p] - s.V[k1];
      jq += eval_line(k.j, g.r1.z(k1) - g.r1.z(p)) * d * d;
    }
  e += 0.25 * g.r2_measure * hr * hr * jq;

  double cq = 0.0;
  if (is_source(kind)) {
    for (int j = 1; j + 1 < om.n; ++j)
      for (int i = 1; i + 1 < om.m; ++i)
        for (int k1 = 0; k1 < g.r1.m; ++k1) {
          const double d =
              s.V[k1] - g.r2_measure * s.u[om.idx(i, j)];
          cq += limit_slice(k.g, om.x(i) - g.r1.z(k1), om.y(j)) * d * d;
        }
    e += 0.5 * om.h * om.h * hr * cq;
  } else {
    for (const auto& [i, j] : om.gamma_nodes())
      for (int k1 = 0; k1 < g.r1.m; ++k1) {
        const double d = s.V[k1] - g.r2_measure * s.u[om.idx(i, j)];
        cq += limit_slice(k.g, om.x(i) - g.r1.z(k1), om.y(j)) * d * d;
      }
    e += 0.5 * om.h * hr * cq;
  }
  return e;
}

double energy(const EpsState& s, const GridSet& g, const Kernels& k,
              ModelKind kind) {
  if (!is_eps(kind))
    throw std::invalid_argument("energy: eps state requires an eps kind");
  const RectGrid& om = g.omega;
  const BoxGrid& b = g.box;
  const double wbox = g.r1.h * b.h2;

  double e = 0.5 * edge_energy(om, s.u);

  double jq = 0.0;
  for (int q = 0; q < b.m2; ++q)
    for (int k1 = 0; k1 < b.r1.m; ++k1) {
      const double vkq = s.v[b.idx(k1, q)];
      for (int r = 0; r < b.m2; ++r)
        for (int p = 0; p < b.r1.m; ++p) {
          const double d = s.v[b.idx(p, r)] - vkq;
          jq += eval_scaled(k.j, b.r1.z(k1) - b.r1.z(p), b.x2(q), b.x2(r),
                            KernelMode::JEps, s.eps) *
                d * d;
        }
    }
  e += 0.25 * wbox * wbox * jq;

  double cq = 0.0;
  if (kind == ModelKind::EpsSource) {
    for (int j = 1; j + 1 < om.n; ++j)
      for (int i = 1; i + 1 < om.m; ++i) {
        const double ui = s.u[om.idx(i, j)];
        for (int q = 0; q < b.m2; ++q)
          for (int k1 = 0; k1 < b.r1.m; ++k1) {
            const double d = s.v[b.idx(k1, q)] - ui;
            cq += eval_scaled(k.g, om.x(i) - b.r1.z(k1), om.y(j), b.x2(q),
                              KernelMode::GEpsSourceU, s.eps) *
                  d * d;
          }
      }
    e += 0.5 * om.h * om.h * wbox * cq;
  } else {
    for (const auto& [i, j] : om.gamma_nodes()) {
      const double ui = s.u[om.idx(i, j)];
      for (int q = 0; q < b.m2; ++q)
        for (int k1 = 0; k1 < b.r1.m; ++k1) {
          const double d = s.v[b.idx(k1, q)] - ui;
          cq += eval_scaled(k.g, om.x(i) - b.r1.z(k1), om.y(j), b.x2(q),
                            KernelMode::GEpsBoundary, s.eps) *
                d * d;
        }
    }
    e += 0.5 * om.h * g.r1.h * b.h2 * cq;
  }
  return e;
}

double weighted_norm(const CoupledState& s, const GridSet& g) {
  double u2 = 0.0;
  for (double x : s.u) u2 += x * x;
  double v2 = 0.0;
  for (double x : s.V) v2 += x * x;
  const double h = g.omega.h;
  return g.r2_measure * h * h * u2 + g.r1.h * v2;
}

double weighted_norm(const EpsState& s, const GridSet& g) {
  double u2 = 0.0;
  for (double x : s.u) u2 += x * x;
  double v2 = 0.0;
  for (double x : s.v) v2 += x * x;
  const double h = g.omega.h;
  return h * h * u2 + g.r1.h * g.box.h2 * v2;
}

double rayleigh_quotient(const CoupledState& s, const GridSet& g,
                         const Kernels& k, ModelKind kind) {
  const double h = g.omega.h;
  const double constraint =
      g.r2_measure * h * h * sum(s.u) + g.r1.h * sum(s.V);
  const double nrm2 = weighted_norm(s, g);
  if (nrm2 <= 0.0)
    throw std::invalid_argument("rayleigh_quotient: zero state");
  if (std::abs(constraint) > 1e-10 * std::max(1.0, std::sqrt(nrm2)))
    throw std::invalid_argument(
        "rayleigh_quotient: state must carry zero weighted mass");
  return energy(s, g, k, kind) / nrm2;
}

SpectralReport smallest_nonzero_eigenvalue(const Generator& gen) {
  SpectralReport rep;
  rep.size = gen.size();
  if (rep.size == 0) throw std::invalid_argument("empty generator");

  const Eigen::MatrixXd wa = gen.weights.asDiagonal() * gen.matrix;
  const double scale = wa.cwiseAbs().maxCoeff();
  rep.symmetry_defect =
      scale > 0 ? (wa - wa.transpose()).cwiseAbs().maxCoeff() / scale : 0.0;
  rep.kernel_residual =
      (gen.matrix * gen.kernel_vector()).cwiseAbs().maxCoeff();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(similarity(gen));
  if (es.info() != Eigen::Success)
    throw spectral_error("eigensolve failed to converge");
  const Eigen::VectorXd& ev = es.eigenvalues();

  const double emax = ev.cwiseAbs().maxCoeff();
  const double zero_band = 1e-10 * std::max(emax, 1e-300);
  rep.lambda_max = -ev.minCoeff();

  int zeros = 0;
  double lambda1 = std::numeric_limits<double>::infinity();
  for (int i = 0; i < ev.size(); ++i) {
    if (std::abs(ev[i]) <= zero_band) {
      ++zeros;
      continue;
    }
    lambda1 = std::min(lambda1, -ev[i]);
  }
  rep.near_zero_count = zeros;
  if (zeros != 1)
    throw spectral_error("expected exactly one eigenvalue in the zero band, "
                         "found " +
                         std::to_string(zeros) +
                         " (coupling graph disconnected or rates degenerate)");
  if (!(lambda1 > 0))
    throw spectral_error("generator has a non-decaying mode (rate " +
                         std::to_string(lambda1) + ")");
  rep.lambda1 = lambda1;
  return rep;
}

std::vector<double> decay_spectrum(const Generator& gen) {
  if (gen.size() == 0) throw std::invalid_argument("empty generator");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(similarity(gen));
  if (es.info() != Eigen::Success)
    throw spectral_error("eigensolve failed to converge");
  std::vector<double> rates(gen.size());
  for (int i = 0; i < gen.size(); ++i) rates[i] = -es.eigenvalues()[i];
  std::sort(rates.begin(), rates.end());
  return rates;
}

CoupledState exact_evolution(const Generator& gen, const CoupledState& s,
                             double t) {
  const int nu = gen.n_omega;
  const int nv = gen.n_r1;
  if (static_cast<int>(s.u.size()) != nu ||
      static_cast<int>(s.V.size()) != nv)
    throw std::invalid_argument("exact_evolution: state/generator mismatch");

  Eigen::VectorXd x(nu + nv);
  for (int i = 0; i < nu; ++i) x[i] = s.u[i];
  for (int k = 0; k < nv; ++k) x[nu + k] = s.V[k];

  const Eigen::VectorXd sqw = gen.weights.cwiseSqrt();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(similarity(gen));
  if (es.info() != Eigen::Success)
    throw spectral_error("eigensolve failed to converge");

  Eigen::VectorXd c = es.eigenvectors().transpose() * (sqw.asDiagonal() * x);
  c.array() *= (es.eigenvalues().array() * t).exp();
  const Eigen::VectorXd y =
      sqw.cwiseInverse().asDiagonal() * (es.eigenvectors() * c);

  CoupledState out;
  out.t = s.t + t;
  out.u.resize(nu);
  out.V.resize(nv);
  for (int i = 0; i < nu; ++i) out.u[i] = y[i];
  for (int k = 0; k < nv; ++k) out.V[k] = y[nu + k];
  return out;
}

double decay_rate_fit(const TimeSeries& series, double t_lo, double t_hi) {
  if (!(t_lo < t_hi))
    throw std::invalid_argument("decay_rate_fit: needs t_lo < t_hi");
  double st = 0, sy = 0, stt = 0, sty = 0;
  long n = 0;
  for (std::size_t r = 0; r < series.rows(); ++r) {
    const double t = series.t[r];
    if (t < t_lo || t > t_hi) continue;
    const double d = series.distance[r];
    if (!(d > 0.0))
      throw std::invalid_argument(
          "decay_rate_fit: nonpositive distance inside the window");
    const double y = std::log(d);
    st += t;
    sy += y;
    stt += t * t;
    sty += t * y;
    ++n;
  }
  if (n < 3)
    throw std::invalid_argument(
        "decay_rate_fit: fewer than three rows in the window");
  const double denom = n * stt - st * st;
  if (denom == 0)
    throw std::invalid_argument("decay_rate_fit: degenerate time samples");
  return -(n * sty - st * sy) / denom;
}

}  // namespace thindiff
