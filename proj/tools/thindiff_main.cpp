#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "thindiff/config.hpp"
#include "thindiff/diagnostics.hpp"
#include "thindiff/errors.hpp"
#include "thindiff/experiments.hpp"
#include "thindiff/output.hpp"
#include "thindiff/spectral.hpp"
#include "thindiff/sweep.hpp"

namespace {

using namespace thindiff;

std::vector<double> parse_eps_list(const std::string& text) {
  std::vector<double> eps;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string tok = text.substr(pos, comma - pos);
    if (tok.empty()) throw config_error("empty entry in eps list '" + text + "'");
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      throw config_error("bad eps value '" + tok + "'");
    }
    if (used != tok.size()) throw config_error("bad eps value '" + tok + "'");
    eps.push_back(v);
    pos = comma + 1;
  }
  return eps;
}

int do_run(const std::string& config_path, const std::string& out_override) {
  RunConfig cfg = load_config(config_path);
  if (!out_override.empty()) cfg.out_dir = out_override;
  const GridSet g = validate_config(cfg);
  const RunOutputs out = execute_run(cfg);
  write_outputs(out, cfg, g, cfg.out_dir);
  std::cout << "model " << to_string(cfg.model) << "\n"
            << "steps " << plan_from(cfg).n_steps() << "\n"
            << "final_t " << format_double(out.series.t.back()) << "\n"
            << "final_mass " << format_double(out.series.mass.back()) << "\n"
            << "final_distance " << format_double(out.series.distance.back())
            << "\n"
            << "mass_drift " << format_double(out.series.ledger.max_drift)
            << "\n"
            << "wrote " << cfg.out_dir << "\n";
  return exit_ok;
}

int do_experiment(int number, const std::string& out_override) {
  const ExperimentReport rep = run_experiment(number, out_override);
  std::cout << "experiment " << number << "\n"
            << "model " << to_string(rep.config.model) << "\n"
            << "steady_value " << format_double(rep.steady_value) << "\n"
            << "initial_node_average "
            << format_double(rep.initial_node_average) << "\n"
            << "final_distance "
            << format_double(rep.outputs.series.distance.back()) << "\n"
            << "final_max_deviation "
            << format_double(rep.final_max_deviation) << "\n"
            << "mass_drift "
            << format_double(rep.outputs.series.ledger.max_drift) << "\n"
            << "wrote " << rep.config.out_dir << "\n";
  return exit_ok;
}

int do_spectrum(const std::string& config_path, const std::string& csv_path) {
  const RunConfig cfg = load_config(config_path);
  const GridSet g = validate_config(cfg);
  if (!is_limit(cfg.model))
    throw config_error("spectrum needs a limit model; rescaled problems are "
                       "analyzed through their limit");
  const Generator gen =
      ops::assemble_generator(g, cfg.model, kernels_from(cfg));
  const SpectralReport rep = smallest_nonzero_eigenvalue(gen);
  std::cout << "size " << rep.size << "\n"
            << "lambda1 " << format_double(rep.lambda1) << "\n"
            << "lambda_max " << format_double(rep.lambda_max) << "\n"
            << "kernel_residual " << format_double(rep.kernel_residual) << "\n"
            << "symmetry_defect " << format_double(rep.symmetry_defect) << "\n"
            << "near_zero_count " << rep.near_zero_count << "\n";
  if (!csv_path.empty()) {
    std::ofstream f(csv_path, std::ios::binary);
    if (!f) throw config_error("cannot write " + csv_path);
    f << "index,decay_rate\n";
    const std::vector<double> rates = decay_spectrum(gen);
    for (std::size_t i = 0; i < rates.size(); ++i)
      f << i << "," << format_double(rates[i]) << "\n";
    std::cout << "wrote " << csv_path << "\n";
  }
  return exit_ok;
}

int do_sweep(const std::string& config_path, const std::string& eps_text,
             double horizon) {
  const RunConfig cfg = load_config(config_path);
  const GridSet g = validate_config(cfg);
  if (!is_eps(cfg.model))
    throw config_error("eps-sweep needs a rescaled (eps) model");
  const double t_final = horizon >= 0 ? horizon : cfg.t_final;
  const CoupledState ic = initial_state(cfg, g);
  const SweepResult r =
      sweep_and_compare(g, cfg.model, kernels_from(cfg), ic,
                        parse_eps_list(eps_text), t_final, cfg.dt,
                        transverse_profile(cfg, g));
  std::cout << "eps,distance,max_u_gap\n";
  for (std::size_t i = 0; i < r.eps.size(); ++i)
    std::cout << format_double(r.eps[i]) << "," << format_double(r.dist_v[i])
              << "," << format_double(r.dist_u_max[i]) << "\n";
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coupled local/nonlocal diffusion workbench"};
  app.require_subcommand(1);

  std::string config_path, out_dir, spectrum_csv, eps_text;
  int exp_number = 1;
  double horizon = -1.0;

  CLI::App* run_cmd =
      app.add_subcommand("run", "evolve one configured problem");
  run_cmd->add_option("--config", config_path, "configuration file")
      ->required();
  run_cmd->add_option("--out", out_dir, "override the output directory");

  CLI::App* exp_cmd =
      app.add_subcommand("experiment", "run one of the six stock setups");
  exp_cmd->add_option("number", exp_number, "setup number, 1..6")->required();
  exp_cmd->add_option("--out", out_dir, "override the output directory");

  CLI::App* spec_cmd = app.add_subcommand(
      "spectrum", "report the decay structure of a limit generator");
  spec_cmd->add_option("--config", config_path, "configuration file")
      ->required();
  spec_cmd->add_option("--spectrum-csv", spectrum_csv,
                       "also write every decay rate to this file");

  CLI::App* sweep_cmd = app.add_subcommand(
      "eps-sweep", "compare rescaled runs against the matching limit run");
  sweep_cmd->add_option("--config", config_path, "configuration file")
      ->required();
  sweep_cmd->add_option("--eps", eps_text, "comma-separated thickness values")
      ->required();
  sweep_cmd->add_option("--t", horizon,
                        "horizon (defaults to the configured t_final)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_config_error;
  }

  try {
    if (run_cmd->parsed()) return do_run(config_path, out_dir);
    if (exp_cmd->parsed()) return do_experiment(exp_number, out_dir);
    if (spec_cmd->parsed()) return do_spectrum(config_path, spectrum_csv);
    if (sweep_cmd->parsed()) return do_sweep(config_path, eps_text, horizon);
  } catch (const config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return exit_config_error;
  } catch (const divergence_error& e) {
    std::cerr << "divergence: " << e.what() << "\n";
    return exit_divergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_failure;
  }
  return exit_failure;
}
