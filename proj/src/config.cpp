#include "thindiff/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "thindiff/errors.hpp"
#include "thindiff/output.hpp"
#include "thindiff/sweep.hpp"

namespace thindiff {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_real(const std::string& v, const std::string& key) {
  double out = 0;
  const char* first = v.data();
  const char* last = v.data() + v.size();
  const auto res = std::from_chars(first, last, out);
  if (res.ec != std::errc{} || res.ptr != last)
    throw config_error("key '" + key + "': cannot parse real value '" + v +
                       "'");
  return out;
}

long parse_int(const std::string& v, const std::string& key) {
  long out = 0;
  const char* first = v.data();
  const char* last = v.data() + v.size();
  const auto res = std::from_chars(first, last, out);
  if (res.ec != std::errc{} || res.ptr != last)
    throw config_error("key '" + key + "': cannot parse integer value '" + v +
                       "'");
  return out;
}

std::vector<double> parse_reals(const std::string& v, const std::string& key) {
  std::vector<double> out;
  std::istringstream in(v);
  std::string tok;
  while (in >> tok) out.push_back(parse_real(tok, key));
  return out;
}

bool parse_bool(const std::string& v, const std::string& key) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw config_error("key '" + key + "': expected true or false, got '" + v +
                     "'");
}

ModelKind parse_model(const std::string& v) {
  if (v == "limit_source") return ModelKind::LimitSource;
  if (v == "limit_boundary") return ModelKind::LimitBoundary;
  if (v == "eps_source") return ModelKind::EpsSource;
  if (v == "eps_boundary") return ModelKind::EpsBoundary;
  throw config_error("unknown model '" + v + "'");
}

Side parse_side(const std::string& v) {
  if (v == "top") return Side::Top;
  if (v == "bottom") return Side::Bottom;
  if (v == "left") return Side::Left;
  if (v == "right") return Side::Right;
  throw config_error("unknown gamma_side '" + v + "'");
}

// Kernel kind names paired with their stock amplitude and support.
KernelSpec parse_kernel(const std::string& v, const std::string& key) {
  if (v == "cosine_half") return cosine_half_1d();
  if (v == "cosine_product") return cosine_product_2d();
  if (v == "uniform_1d") return uniform_1d(1.0, std::numbers::pi / 2);
  if (v == "uniform_2d") return uniform_2d(1.0, std::numbers::pi / 2);
  throw config_error("key '" + key + "': unknown kernel '" + v + "'");
}

IcSpec parse_ic(const std::string& v, const std::string& key) {
  if (v == "zero") return {IcKind::Zero, 0.0};
  if (v == "one") return {IcKind::One, 0.0};
  if (v == "cos_product") return {IcKind::CosProduct, 0.0};
  if (v == "parabola_down") return {IcKind::ParabolaDown, 0.0};
  if (v == "radial_sq") return {IcKind::RadialSq, 0.0};
  if (v == "sq") return {IcKind::Sq, 0.0};
  if (v.starts_with("const(") && v.ends_with(")"))
    return {IcKind::Const, parse_real(v.substr(6, v.size() - 7), key)};
  throw config_error("key '" + key + "': unknown initial condition '" + v +
                     "'");
}

VProfile parse_profile(const std::string& v) {
  if (v == "constant") return VProfile::Constant;
  if (v == "ramp") return VProfile::Ramp;
  throw config_error("unknown ic_v_x2 '" + v + "'");
}

std::string kernel_name(KernelKind k) {
  switch (k) {
    case KernelKind::CosineHalf1D: return "cosine_half";
    case KernelKind::CosineProduct2D: return "cosine_product";
    case KernelKind::Uniform1D: return "uniform_1d";
    case KernelKind::Uniform2D: return "uniform_2d";
  }
  return "?";
}

std::string ic_name(const IcSpec& ic) {
  switch (ic.kind) {
    case IcKind::Zero: return "zero";
    case IcKind::One: return "one";
    case IcKind::CosProduct: return "cos_product";
    case IcKind::ParabolaDown: return "parabola_down";
    case IcKind::RadialSq: return "radial_sq";
    case IcKind::Sq: return "sq";
    case IcKind::Const: return "const(" + format_double(ic.value) + ")";
  }
  return "?";
}

}  // namespace

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::LimitSource: return "limit_source";
    case ModelKind::LimitBoundary: return "limit_boundary";
    case ModelKind::EpsSource: return "eps_source";
    case ModelKind::EpsBoundary: return "eps_boundary";
  }
  return "?";
}

std::string to_string(Side side) {
  switch (side) {
    case Side::Top: return "top";
    case Side::Bottom: return "bottom";
    case Side::Left: return "left";
    case Side::Right: return "right";
  }
  return "?";
}

std::string to_string(IcKind kind) { return ic_name({kind, 0.0}); }

double ic_eval(const IcSpec& ic, double x, double y) {
  switch (ic.kind) {
    case IcKind::Zero: return 0.0;
    case IcKind::One: return 1.0;
    case IcKind::CosProduct:
      return std::cos(std::numbers::pi * x / 2) *
             std::cos(std::numbers::pi * y / 2);
    case IcKind::ParabolaDown: return 9.0 - x * x;
    case IcKind::RadialSq: return x * x + y * y;
    case IcKind::Sq: return x * x;
    case IcKind::Const: return ic.value;
  }
  return 0.0;
}

double ic_eval(const IcSpec& ic, double z) {
  switch (ic.kind) {
    case IcKind::Zero: return 0.0;
    case IcKind::One: return 1.0;
    case IcKind::CosProduct: return std::cos(std::numbers::pi * z / 2);
    case IcKind::ParabolaDown: return 9.0 - z * z;
    case IcKind::RadialSq: return z * z;
    case IcKind::Sq: return z * z;
    case IcKind::Const: return ic.value;
  }
  return 0.0;
}

RunConfig parse_config(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw config_error("line " + std::to_string(lineno) +
                         ": expected 'key = value', got '" + stripped + "'");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty())
      throw config_error("line " + std::to_string(lineno) + ": empty key");
    if (!kv.emplace(key, value).second)
      throw config_error("duplicate key '" + key + "'");
  }

  RunConfig cfg;
  const auto take = [&](const char* key) {
    auto it = kv.find(key);
    if (it == kv.end()) return std::pair<bool, std::string>{false, ""};
    std::pair<bool, std::string> out{true, it->second};
    kv.erase(it);
    return out;
  };

  if (auto [ok, v] = take("model"); ok) cfg.model = parse_model(v);
  if (auto [ok, v] = take("omega_bounds"); ok) {
    const auto b = parse_reals(v, "omega_bounds");
    if (b.size() != 4)
      throw config_error("omega_bounds needs 4 values: x_lo x_hi y_lo y_hi");
    cfg.grid.omega_x_lo = b[0];
    cfg.grid.omega_x_hi = b[1];
    cfg.grid.omega_y_lo = b[2];
    cfg.grid.omega_y_hi = b[3];
  }
  if (auto [ok, v] = take("r1_bounds"); ok) {
    const auto b = parse_reals(v, "r1_bounds");
    if (b.size() != 2) throw config_error("r1_bounds needs 2 values: lo hi");
    cfg.grid.r1_lo = b[0];
    cfg.grid.r1_hi = b[1];
  }
  if (auto [ok, v] = take("r2_bounds"); ok) {
    const auto b = parse_reals(v, "r2_bounds");
    if (b.size() != 2) throw config_error("r2_bounds needs 2 values: lo hi");
    cfg.grid.r2_lo = b[0];
    cfg.grid.r2_hi = b[1];
  }
  if (auto [ok, v] = take("m"); ok) cfg.grid.m = (int)parse_int(v, "m");
  if (auto [ok, v] = take("n"); ok) cfg.grid.n = (int)parse_int(v, "n");
  if (auto [ok, v] = take("m2"); ok) cfg.grid.m2 = (int)parse_int(v, "m2");
  if (auto [ok, v] = take("gamma_side"); ok) cfg.grid.gamma = parse_side(v);
  if (auto [ok, v] = take("r2_measure"); ok)
    cfg.grid.r2_measure = parse_real(v, "r2_measure");
  if (auto [ok, v] = take("dt"); ok) cfg.dt = parse_real(v, "dt");
  if (auto [ok, v] = take("t_final"); ok)
    cfg.t_final = parse_real(v, "t_final");
  if (auto [ok, v] = take("record_every"); ok)
    cfg.record_every = parse_int(v, "record_every");
  if (auto [ok, v] = take("kernel_j"); ok)
    cfg.kernel_j = parse_kernel(v, "kernel_j");
  if (auto [ok, v] = take("kernel_j_amplitude"); ok)
    cfg.kernel_j.amplitude = parse_real(v, "kernel_j_amplitude");
  if (auto [ok, v] = take("kernel_j_support"); ok)
    cfg.kernel_j.support_radius = parse_real(v, "kernel_j_support");
  if (auto [ok, v] = take("kernel_g"); ok)
    cfg.kernel_g = parse_kernel(v, "kernel_g");
  if (auto [ok, v] = take("kernel_g_amplitude"); ok)
    cfg.kernel_g.amplitude = parse_real(v, "kernel_g_amplitude");
  if (auto [ok, v] = take("kernel_g_support"); ok)
    cfg.kernel_g.support_radius = parse_real(v, "kernel_g_support");
  if (auto [ok, v] = take("ic_u"); ok) cfg.ic_u = parse_ic(v, "ic_u");
  if (auto [ok, v] = take("ic_v"); ok) cfg.ic_v = parse_ic(v, "ic_v");
  if (auto [ok, v] = take("ic_v_x2"); ok) cfg.ic_v_x2 = parse_profile(v);
  if (auto [ok, v] = take("eps"); ok) cfg.eps = parse_real(v, "eps");
  if (auto [ok, v] = take("strict_stability"); ok)
    cfg.strict_stability = parse_bool(v, "strict_stability");
  if (auto [ok, v] = take("snapshots"); ok)
    cfg.snapshots = parse_reals(v, "snapshots");
  if (auto [ok, v] = take("out_dir"); ok) {
    if (v.empty()) throw config_error("out_dir must not be empty");
    cfg.out_dir = v;
  }

  if (!kv.empty())
    throw config_error("unknown key '" + kv.begin()->first + "'");
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string emit_config(const RunConfig& cfg) {
  std::ostringstream out;
  out << "model = " << to_string(cfg.model) << "\n";
  out << "omega_bounds = " << format_double(cfg.grid.omega_x_lo) << " "
      << format_double(cfg.grid.omega_x_hi) << " "
      << format_double(cfg.grid.omega_y_lo) << " "
      << format_double(cfg.grid.omega_y_hi) << "\n";
  out << "r1_bounds = " << format_double(cfg.grid.r1_lo) << " "
      << format_double(cfg.grid.r1_hi) << "\n";
  out << "r2_bounds = " << format_double(cfg.grid.r2_lo) << " "
      << format_double(cfg.grid.r2_hi) << "\n";
  out << "m = " << cfg.grid.m << "\n";
  out << "n = " << cfg.grid.n << "\n";
  out << "m2 = " << cfg.grid.m2 << "\n";
  out << "gamma_side = " << to_string(cfg.grid.gamma) << "\n";
  if (cfg.grid.r2_measure >= 0)
    out << "r2_measure = " << format_double(cfg.grid.r2_measure) << "\n";
  out << "dt = " << format_double(cfg.dt) << "\n";
  out << "t_final = " << format_double(cfg.t_final) << "\n";
  out << "record_every = " << cfg.record_every << "\n";
  out << "kernel_j = " << kernel_name(cfg.kernel_j.kind) << "\n";
  out << "kernel_j_amplitude = " << format_double(cfg.kernel_j.amplitude)
      << "\n";
  out << "kernel_j_support = " << format_double(cfg.kernel_j.support_radius)
      << "\n";
  out << "kernel_g = " << kernel_name(cfg.kernel_g.kind) << "\n";
  out << "kernel_g_amplitude = " << format_double(cfg.kernel_g.amplitude)
      << "\n";
  out << "kernel_g_support = " << format_double(cfg.kernel_g.support_radius)
      << "\n";
  out << "ic_u = " << ic_name(cfg.ic_u) << "\n";
  out << "ic_v = " << ic_name(cfg.ic_v) << "\n";
  out << "ic_v_x2 = "
      << (cfg.ic_v_x2 == VProfile::Constant ? "constant" : "ramp") << "\n";
  if (cfg.eps != 0.0) out << "eps = " << format_double(cfg.eps) << "\n";
  out << "strict_stability = " << (cfg.strict_stability ? "true" : "false")
      << "\n";
  if (!cfg.snapshots.empty()) {
    out << "snapshots =";
    for (double t : cfg.snapshots) out << " " << format_double(t);
    out << "\n";
  }
  out << "out_dir = " << cfg.out_dir << "\n";
  return out.str();
}

GridSet validate_config(const RunConfig& cfg) {
  GridSet g = build_grids(cfg.grid);
  if (!(cfg.dt > 0)) throw config_error("dt must be positive");
  if (cfg.t_final < 0) throw config_error("t_final must be nonnegative");
  if (cfg.record_every < 1) throw config_error("record_every must be >= 1");
  check_cfl(cfg.dt, g.omega.h);

  if (is_1d(cfg.kernel_g.kind))
    throw config_error("kernel_g must be a planar kind");
  for (const auto* k : {&cfg.kernel_j, &cfg.kernel_g}) {
    if (k->amplitude < 0)
      throw config_error("kernel amplitude must be nonnegative");
    if (!(k->support_radius > 0))
      throw config_error("kernel support must be positive");
  }

  if (is_eps(cfg.model)) {
    if (!(cfg.eps > 0) || cfg.eps > 1)
      throw config_error("eps models need eps in (0, 1]");
    if (is_1d(cfg.kernel_j.kind))
      throw config_error("eps models need a planar kernel_j");
  }

  for (double t : cfg.snapshots)
    if (t < 0 || t > cfg.t_final * (1 + 1e-12))
      throw config_error("snapshot time " + format_double(t) +
                         " outside [0, t_final]");
  return g;
}

Kernels kernels_from(const RunConfig& cfg) {
  return {cfg.kernel_j, cfg.kernel_g};
}

CoupledState initial_state(const RunConfig& cfg, const GridSet& g) {
  CoupledState s;
  s.u.resize(g.omega.size());
  for (int j = 0; j < g.omega.n; ++j)
    for (int i = 0; i < g.omega.m; ++i)
      s.u[g.omega.idx(i, j)] = ic_eval(cfg.ic_u, g.omega.x(i), g.omega.y(j));
  s.V.resize(g.r1.m);
  for (int k = 0; k < g.r1.m; ++k) s.V[k] = ic_eval(cfg.ic_v, g.r1.z(k));
  return s;
}

std::vector<double> transverse_profile(const RunConfig& cfg,
                                       const GridSet& g) {
  if (cfg.ic_v_x2 == VProfile::Constant) return {};
  const BoxGrid& b = g.box;
  double mean = 0.0;
  for (int q = 0; q < b.m2; ++q) mean += b.x2(q);
  mean /= b.m2;
  const double span = b.r2_hi - b.r2_lo;
  std::vector<double> f(b.m2);
  for (int q = 0; q < b.m2; ++q)
    f[q] = 1.0 + 0.5 * (b.x2(q) - mean) / span;
  return f;
}

EpsState initial_eps_state(const RunConfig& cfg, const GridSet& g) {
  return make_eps_state(g, initial_state(cfg, g), cfg.eps,
                        transverse_profile(cfg, g));
}

StepPlan plan_from(const RunConfig& cfg) {
  StepPlan p;
  p.dt = cfg.dt;
  p.t_final = cfg.t_final;
  p.record_every = cfg.record_every;
  p.strict_stability = cfg.strict_stability;
  return p;
}

}  // namespace thindiff
