#include "thindiff/output.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>

#include "thindiff/errors.hpp"

namespace thindiff {

std::string format_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw config_error("cannot write output file '" + p.string() + "'");
  return f;
}

void write_diagnostics(const std::filesystem::path& dir,
                       const TimeSeries& ts) {
  auto f = open_out(dir / "diagnostics.csv");
  f << "t,mass,distance,energy\n";
  for (std::size_t r = 0; r < ts.rows(); ++r)
    f << format_double(ts.t[r]) << "," << format_double(ts.mass[r]) << ","
      << format_double(ts.distance[r]) << "," << format_double(ts.energy[r])
      << "\n";
}

void write_snapshot(const std::filesystem::path& dir, const Snapshot& snap,
                    const RectGrid& omega) {
  const std::string tag = format_double(snap.t);
  {
    auto f = open_out(dir / ("snapshot_" + tag + ".csv"));
    for (int j = 0; j < omega.n; ++j) {
      for (int i = 0; i < omega.m; ++i) {
        if (i) f << ",";
        f << format_double(snap.u[omega.idx(i, j)]);
      }
      f << "\n";
    }
  }
  {
    auto f = open_out(dir / ("snapshot_v_" + tag + ".csv"));
    for (std::size_t k = 0; k < snap.V.size(); ++k) {
      if (k) f << ",";
      f << format_double(snap.V[k]);
    }
    f << "\n";
  }
}

}  // namespace

void write_outputs(const RunOutputs& out, const RunConfig& cfg,
                   const GridSet& g, const std::string& out_dir,
                   const std::vector<std::pair<std::string, std::string>>&
                       report_extras) {
  const std::filesystem::path dir(out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec)
    throw config_error("cannot create output directory '" + out_dir + "': " +
                       ec.message());

  write_diagnostics(dir, out.series);
  for (const Snapshot& snap : out.snapshots) write_snapshot(dir, snap, g.omega);

  const std::string cfg_text = emit_config(cfg);
  open_out(dir / "config.cfg") << cfg_text;

  auto rep = open_out(dir / "report.txt");
  const TimeSeries& ts = out.series;
  rep << "model = " << to_string(cfg.model) << "\n";
  if (!ts.t.empty()) {
    rep << "final_t = " << format_double(ts.t.back()) << "\n";
    rep << "final_mass = " << format_double(ts.mass.back()) << "\n";
    rep << "final_distance = " << format_double(ts.distance.back()) << "\n";
    rep << "final_energy = " << format_double(ts.energy.back()) << "\n";
  }
  rep << "mass_initial = " << format_double(ts.ledger.initial) << "\n";
  rep << "mass_drift = " << format_double(ts.ledger.max_drift) << "\n";
  for (const auto& [key, value] : report_extras)
    rep << key << " = " << value << "\n";
  rep << "\n# effective config\n" << cfg_text;
}

}  // namespace thindiff
