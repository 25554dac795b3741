#pragma once

#include <string>
#include <utility>
#include <vector>

#include "thindiff/config.hpp"
#include "thindiff/diagnostics.hpp"
#include "thindiff/grids.hpp"

namespace thindiff {

// Shortest decimal form that parses back to the same double.
std::string format_double(double x);

// Captured state at one recorded time; V holds the segment field for limit
// runs and the collapsed box field for eps runs.
struct Snapshot {
  double t = 0;
  std::vector<double> u;
  std::vector<double> V;
};

struct RunOutputs {
  TimeSeries series;
  std::vector<Snapshot> snapshots;
};

// Writes diagnostics.csv (t,mass,distance,energy), one snapshot_<t>.csv per
// snapshot (u as n rows of m columns) with its snapshot_v_<t>.csv row,
// config.cfg (the effective configuration, reparseable), and report.txt.
// All numbers use format_double, so identical runs produce identical bytes.
void write_outputs(const RunOutputs& out, const RunConfig& cfg,
                   const GridSet& g, const std::string& out_dir,
                   const std::vector<std::pair<std::string, std::string>>&
                       report_extras = {});

}  // namespace thindiff
