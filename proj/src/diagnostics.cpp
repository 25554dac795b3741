#include "thindiff/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

namespace thindiff {

void MassLedger::record(double q) {
  final = q;
  max_drift = std::max(max_drift, std::abs(q - initial));
}

namespace {

double sum(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s;
}

}  // namespace

double total_mass(const CoupledState& s, const GridSet& g) {
  const double h = g.omega.h;
  return h * h * sum(s.u) + g.r1.h * sum(s.V);
}

double total_mass(const EpsState& s, const GridSet& g) {
  const double h = g.omega.h;
  return h * h * sum(s.u) + g.r1.h * g.box.h2 * sum(s.v);
}

double mean_steady_value(double mass, const GridSet& g, ModelKind kind) {
  const double h = g.omega.h;
  const double area = h * h * g.omega.size();
  if (is_limit(kind))
    return mass / (area + g.r1.h * g.r1.m * g.r2_measure);
  return mass / (area + g.r1.h * g.box.h2 * g.box.size());
}

double distance_to_steady(const CoupledState& s, const GridSet& g,
                          ModelKind kind) {
  if (!is_limit(kind))
    throw std::invalid_argument(
        "distance_to_steady: coupled state requires a limit kind");
  const double k = mean_steady_value(total_mass(s, g), g, kind);
  const double vk = g.r2_measure * k;
  double du2 = 0.0;
  for (double x : s.u) du2 += (x - k) * (x - k);
  double dv2 = 0.0;
  for (double x : s.V) dv2 += (x - vk) * (x - vk);
  const double h = g.omega.h;
  return std::sqrt(g.r2_measure * h * h * du2 + g.r1.h * dv2);
}

double distance_to_steady(const EpsState& s, const GridSet& g,
                          ModelKind kind) {
  if (!is_eps(kind))
    throw std::invalid_argument(
        "distance_to_steady: eps state requires an eps kind");
  const double k = mean_steady_value(total_mass(s, g), g, kind);
  double du2 = 0.0;
  for (double x : s.u) du2 += (x - k) * (x - k);
  double dv2 = 0.0;
  for (double x : s.v) dv2 += (x - k) * (x - k);
  const double h = g.omega.h;
  return std::sqrt(h * h * du2 + g.r1.h * g.box.h2 * dv2);
}

}  // namespace thindiff
