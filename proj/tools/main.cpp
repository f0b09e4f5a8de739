// Copyright 2026 The isingcn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "isingcn/gate_lab.hpp"

namespace {

struct Common {
  std::optional<std::string> config;
  std::optional<std::string> preset;
  isingcn::tools::Overrides overrides;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--config", c.config, "Config file (key = value lines)");
  cmd->add_option("--preset", c.preset, "Parameter preset: params12 or params24");
  cmd->add_option("--initial", c.overrides.initial, "Initial state: digital:<label>, superposition or amps:...");
  cmd->add_option("--frame", c.overrides.frame, "Output frame: raw or primed");
  cmd->add_option("--out", c.overrides.out, "Output path ('-' for stdout)");
  cmd->add_option("--duration", c.overrides.duration, "Pulse duration, or 'auto' for the pi duration");
  cmd->add_option("--sample-dt", c.overrides.sample_dt, "Sampling interval for simulate");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace isingcn::tools;

  CLI::App app{"isingcn: two-spin Ising pi-pulse simulator and CN gate calibrator"};
  app.require_subcommand(1);

  Common common;

  auto* simulate = app.add_subcommand("simulate", "Amplitude time series over one pulse (CSV)");
  add_common(simulate, common);

  auto* tomo = app.add_subcommand("tomography", "Reconstruct the gate and its GCN phases");
  add_common(tomo, common);

  CalibrateOptions cal;
  std::string free_list = "omega1,a2,duration";
  auto* calibrate = app.add_subcommand("calibrate", "Pi-pulse duration and pure-CN parameter search");
  add_common(calibrate, common);
  calibrate->add_flag("--pi-duration", cal.pi_duration, "Find the duration of maximum |11> -> |10> transfer");
  calibrate->add_flag("--pure-cn", cal.pure_cn, "Nelder-Mead search for a raw-frame i*CN gate");
  calibrate->add_flag("--cn-duration", cal.cn_duration, "Scan the duration alone for the best i*CN match");
  calibrate->add_option("--free", free_list, "Free parameters for --pure-cn (omega1,a2,duration)");
  calibrate->add_flag("--tie-a1", cal.search.tie_a1, "Hold a1 = a2 * omega1 / omega2");
  calibrate->add_option("--window", cal.search.window, "Relative search half-width")->capture_default_str();
  calibrate->add_option("--max-evals", cal.search.max_evaluations, "Objective evaluation budget")
      ->capture_default_str();
  calibrate->add_option("--tol", cal.search.tolerance, "Objective value counted as converged")
      ->capture_default_str();

  SweepOptions sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "Grid over one parameter: duration, transfer, fidelities (CSV)");
  add_common(sweep, common);
  sweep->add_option("--param", sweep_opts.param, "omega1, omega2, coupling_j, a1, a2 or duration")->required();
  sweep->add_option("--from", sweep_opts.from, "First grid value")->required();
  sweep->add_option("--to", sweep_opts.to, "Last grid value")->required();
  sweep->add_option("--steps", sweep_opts.steps, "Number of grid points")->capture_default_str();
  sweep->add_option("--threads", sweep_opts.threads, "Worker threads (0 = all cores)");

  CLI11_PARSE(app, argc, argv);

  const Io io{std::cout, std::cerr};
  try {
    const auto config = load_run_config(common.config, common.preset, common.overrides);
    if (*simulate) return cmd_simulate(config, io);
    if (*tomo) return cmd_tomography(config, io);
    if (*calibrate) {
      cal.search.free = isingcn::parse_free_parameters(free_list);
      return cmd_calibrate(config, cal, io);
    }
    if (*sweep) return cmd_sweep(config, sweep_opts, io);
  } catch (const std::exception& e) {
    std::cerr << "isingcn: error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
