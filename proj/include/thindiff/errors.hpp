#pragma once

#include <stdexcept>
#include <string>

namespace thindiff {

// Process exit codes used by the command line driver.
enum ExitCode : int {
  exit_ok = 0,
  exit_failure = 1,
  exit_config_error = 2,
  exit_divergence = 3,
};

// Invalid or inconsistent run configuration (bad keys, bad bounds, CFL
// violation, model/kernel mismatch discovered at validation time).
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A field value left the finite range during time stepping.
struct divergence_error : std::runtime_error {
  divergence_error(const std::string& msg, long step_index)
      : std::runtime_error(msg), step(step_index) {}
  long step;
};

// Structural defect detected while analyzing an assembled generator.
struct spectral_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace thindiff
