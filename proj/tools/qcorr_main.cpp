// Command-line front end: parameter sweeps over (J, T) with optional bit-flip
// or generalized-amplitude-damping noise, figure dataset emission, critical
// temperature location, the gqd1-vs-qd ordering report, and the verification
// suite.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qcorr/sweep.hpp"
#include "qcorr/verify.hpp"

namespace {

struct GridOptions {
  double j_min = -4.0;
  double j_max = 4.0;
  int j_steps = 81;
  double t_min = 0.1;
  double t_max = 3.0;
  int t_steps = 59;
};

struct ChannelOptions {
  std::string channel = "none";
  double p = 0.5;
  double gamma = 0.5;
};

void add_grid_flags(CLI::App* cmd, GridOptions* grid) {
  cmd->add_option("--j-min", grid->j_min, "Lower end of the coupling axis");
  cmd->add_option("--j-max", grid->j_max, "Upper end of the coupling axis");
  cmd->add_option("--j-steps", grid->j_steps, "Number of coupling samples");
  cmd->add_option("--t-min", grid->t_min, "Lower end of the temperature axis (> 0)");
  cmd->add_option("--t-max", grid->t_max, "Upper end of the temperature axis");
  cmd->add_option("--t-steps", grid->t_steps, "Number of temperature samples");
}

void add_channel_flags(CLI::App* cmd, ChannelOptions* channel) {
  cmd->add_option("--channel", channel->channel, "Noise channel")
      ->check(CLI::IsMember({"none", "bf", "gad"}));
  cmd->add_option("--p", channel->p, "Decoherence probability (bf; gad requires 1/2)");
  cmd->add_option("--gamma", channel->gamma, "Damping strength (gad only)");
}

qcorr::NoiseSetting to_noise(const ChannelOptions& channel) {
  qcorr::NoiseSetting noise;
  if (channel.channel == "bf") {
    noise.kind = qcorr::NoiseKind::BitFlip;
    noise.p = channel.p;
  } else if (channel.channel == "gad") {
    noise.kind = qcorr::NoiseKind::Gad;
    noise.p = channel.p;
    noise.gamma = channel.gamma;
  }
  return noise;
}

qcorr::MeasureSelection parse_measures(const std::string& spec) {
  qcorr::MeasureSelection selection{false, false, false};
  std::stringstream stream(spec);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (token == "qd") {
      selection.qd = true;
    } else if (token == "gqd1") {
      selection.gqd1 = true;
    } else if (token == "conc" || token == "concurrence") {
      selection.concurrence = true;
    } else if (!token.empty()) {
      throw CLI::ValidationError("--measures", "unknown measure '" + token + "'");
    }
  }
  return selection;
}

std::string fmt(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Quantum discord, 1-norm geometric discord and concurrence for the "
      "two-qubit thermal XXX chain under bit-flip / generalized amplitude "
      "damping noise"};
  app.require_subcommand(1);

  GridOptions grid;
  ChannelOptions channel;
  std::string measures = "qd,gqd1,conc";
  bool oracle = false;
  std::uint64_t seed = 1;
  std::string out;

  // sweep
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Evaluate a (J, T) grid and write a CSV");
  add_grid_flags(sweep_cmd, &grid);
  add_channel_flags(sweep_cmd, &channel);
  sweep_cmd->add_option("--measures", measures, "Comma list from {qd, gqd1, conc}");
  sweep_cmd->add_flag("--oracle", oracle, "Also compute the numeric cross-check columns");
  sweep_cmd->add_option("--seed", seed, "Seed for the numeric optimizers");
  sweep_cmd->add_option("--out", out, "Output CSV path")->required();

  // figure
  int fig_id = 0;
  std::string out_dir = "figures";
  CLI::App* figure_cmd = app.add_subcommand("figure", "Emit the dataset behind one figure (1-8)");
  figure_cmd->add_option("id", fig_id, "Figure id in 1..8")->required();
  figure_cmd->add_option("--out-dir", out_dir, "Directory for the CSV files");
  auto* fig_jmin = figure_cmd->add_option("--j-min", grid.j_min, "Override the coupling axis");
  auto* fig_jmax = figure_cmd->add_option("--j-max", grid.j_max, "");
  auto* fig_jsteps = figure_cmd->add_option("--j-steps", grid.j_steps, "");
  auto* fig_tmin = figure_cmd->add_option("--t-min", grid.t_min, "Override the dense temperature axis");
  auto* fig_tmax = figure_cmd->add_option("--t-max", grid.t_max, "");
  auto* fig_tsteps = figure_cmd->add_option("--t-steps", grid.t_steps, "");

  // tc
  double tc_j = 1.0;
  CLI::App* tc_cmd = app.add_subcommand("tc", "Critical temperature where concurrence vanishes");
  tc_cmd->add_option("--j", tc_j, "Coupling constant (> 0)")->required();
  add_channel_flags(tc_cmd, &channel);

  // ordering
  CLI::App* ordering_cmd =
      app.add_subcommand("ordering", "Sign report for gqd1 - qd over a grid (default: T = 1 slice)");
  GridOptions ordering_grid{-4.0, 4.0, 161, 1.0, 1.0, 1};
  add_grid_flags(ordering_cmd, &ordering_grid);
  add_channel_flags(ordering_cmd, &channel);
  ordering_cmd->add_option("--seed", seed, "Seed for the numeric optimizers");
  ordering_cmd->add_option("--out", out, "Optional per-point CSV path");

  // verify
  std::string scratch_dir;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run the full oracle/invariant suite and print pass/fail lines");
  verify_cmd->add_option("--seed", seed, "Seed for the randomized suites");
  verify_cmd->add_option("--scratch-dir", scratch_dir, "Writable directory for round-trip files");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sweep_cmd) {
      qcorr::SweepConfig cfg;
      cfg.j_range = {grid.j_min, grid.j_max, grid.j_steps};
      cfg.t_range = {grid.t_min, grid.t_max, grid.t_steps};
      cfg.channel = to_noise(channel);
      cfg.measures = parse_measures(measures);
      cfg.oracle_mode = oracle;
      cfg.seed = seed;
      cfg.output_path = out;
      const auto rows = qcorr::run_sweep(cfg);
      std::cout << "wrote " << rows.size() << " rows to " << out << "\n";
    } else if (*figure_cmd) {
      qcorr::FigureGrid overrides;
      if (fig_jmin->count() || fig_jmax->count() || fig_jsteps->count()) {
        overrides.j_range = qcorr::AxisSpec{grid.j_min, grid.j_max, grid.j_steps};
      }
      if (fig_tmin->count() || fig_tmax->count() || fig_tsteps->count()) {
        overrides.t_range = qcorr::AxisSpec{grid.t_min, grid.t_max, grid.t_steps};
      }
      const auto files = qcorr::figure_dataset(fig_id, out_dir, overrides);
      for (const auto& file : files) {
        std::cout << "wrote " << file.rows.size() << " rows to " << file.path.string() << "\n";
      }
    } else if (*tc_cmd) {
      const double tc = qcorr::sudden_death_temperature(tc_j, to_noise(channel));
      std::cout << "Tc = " << fmt(tc) << "\n";
    } else if (*ordering_cmd) {
      qcorr::SweepConfig cfg;
      cfg.j_range = {ordering_grid.j_min, ordering_grid.j_max, ordering_grid.j_steps};
      cfg.t_range = {ordering_grid.t_min, ordering_grid.t_max, ordering_grid.t_steps};
      cfg.channel = to_noise(channel);
      cfg.measures = {true, true, false};
      cfg.seed = seed;
      cfg.output_path = out;
      const auto report = qcorr::ordering_report(cfg);
      std::cout << qcorr::format_ordering_report(report);
    } else if (*verify_cmd) {
      if (scratch_dir.empty()) {
        scratch_dir = (std::filesystem::temp_directory_path() / "qcorr-verify").string();
      }
      const auto results = qcorr::run_acceptance_checks(scratch_dir, seed);
      int failures = 0;
      for (const auto& check : results) {
        std::cout << (check.pass ? "[PASS] " : "[FAIL] ") << check.name << " — " << check.detail
                  << "\n";
        failures += check.pass ? 0 : 1;
      }
      std::cout << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed")
                << "\n";
      return failures == 0 ? 0 : 1;
    }
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
  return 0;
}
