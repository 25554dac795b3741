#pragma once

#include <string>
#include <vector>

#include "thindiff/grids.hpp"
#include "thindiff/kernels.hpp"
#include "thindiff/model.hpp"
#include "thindiff/operators.hpp"
#include "thindiff/state.hpp"
#include "thindiff/stepper.hpp"

namespace thindiff {

// Initial-condition presets. 2D evaluation feeds the rectangle field, 1D the
// segment field; presets that read only one coordinate use the first one.
enum class IcKind { Zero, One, CosProduct, ParabolaDown, RadialSq, Sq, Const };

struct IcSpec {
  IcKind kind = IcKind::Zero;
  double value = 0.0;  // only Const reads this

  bool operator==(const IcSpec&) const = default;
};

double ic_eval(const IcSpec& ic, double x, double y);
double ic_eval(const IcSpec& ic, double z);

// Transverse shape of the lifted box field: flat, or a mean-one ramp that
// makes the transverse average genuinely informative.
enum class VProfile { Constant, Ramp };

struct RunConfig {
  ModelKind model = ModelKind::LimitSource;
  GridParams grid;
  double dt = 0.005;
  double t_final = 50.0;
  long record_every = 20;
  KernelSpec kernel_j{KernelKind::CosineHalf1D, 0.5, std::numbers::pi / 2};
  KernelSpec kernel_g{KernelKind::CosineProduct2D, 0.25, std::numbers::pi / 2};
  IcSpec ic_u{IcKind::Zero, 0.0};
  IcSpec ic_v{IcKind::One, 0.0};
  VProfile ic_v_x2 = VProfile::Constant;
  double eps = 0.0;  // eps kinds only
  bool strict_stability = false;
  std::vector<double> snapshots;  // empty: initial and final state
  std::string out_dir = "out";

  bool operator==(const RunConfig&) const = default;
};

// Line-oriented "key = value" format, one key per line, '#' comments.
// Unknown and duplicate keys are errors (config_error), as are malformed
// values. parse_config(emit_config(c)) reproduces c exactly.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);
std::string emit_config(const RunConfig& cfg);

// Full semantic validation: grid construction, CFL gate, kernel/model
// compatibility, eps range. Throws config_error; returns the grids since
// building them is half the validation.
GridSet validate_config(const RunConfig& cfg);

Kernels kernels_from(const RunConfig& cfg);
CoupledState initial_state(const RunConfig& cfg, const GridSet& g);
EpsState initial_eps_state(const RunConfig& cfg, const GridSet& g);
std::vector<double> transverse_profile(const RunConfig& cfg, const GridSet& g);
StepPlan plan_from(const RunConfig& cfg);

std::string to_string(ModelKind kind);
std::string to_string(Side side);
std::string to_string(IcKind kind);

}  // namespace thindiff
