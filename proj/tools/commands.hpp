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

#ifndef ISINGCN_TOOLS_COMMANDS_HPP_
#define ISINGCN_TOOLS_COMMANDS_HPP_

#include <iosfwd>
#include <optional>
#include <string>

#include "isingcn/calibrate.hpp"
#include "isingcn/run_config.hpp"

namespace isingcn::tools {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitGcnViolation = 2;
inline constexpr int kExitNotConverged = 3;

struct Io {
  std::ostream& out;  // report destination when the config has no `out`
  std::ostream& log;  // summary lines
};

struct Overrides {
  std::optional<std::string> initial;
  std::optional<std::string> frame;
  std::optional<std::string> out;
  std::optional<std::string> duration;  // number or "auto"
  std::optional<double> sample_dt;
};

/// Builds a RunConfig from an optional config file and/or preset name, then
/// applies command-line overrides. At least one source is required.
RunConfig load_run_config(const std::optional<std::string>& config_path,
                          const std::optional<std::string>& preset, const Overrides& overrides);

/// Writes the amplitude time series as CSV. Requires `initial`; sample_dt
/// defaults to duration / 1000.
int cmd_simulate(const RunConfig& config, const Io& io);

/// Gate matrix, GCN phases and fidelities against CN and i*CN.
int cmd_tomography(const RunConfig& config, const Io& io);

struct CalibrateOptions {
  bool pi_duration = false;
  bool pure_cn = false;
  bool cn_duration = false;
  SearchSpec search;
};

/// Writes the tuned parameters in config format plus `#` result comments.
int cmd_calibrate(const RunConfig& config, const CalibrateOptions& options, const Io& io);

struct SweepOptions {
  std::string param;  // omega1, omega2, coupling_j, a1, a2 or duration
  double from = 0.0;
  double to = 0.0;
  int steps = 11;
  unsigned threads = 0;  // 0 = hardware concurrency
};

inline constexpr std::string_view kSweepHeader =
    "index,value,duration,transfer,fidelity_cn,fidelity_icn,fidelity_gcn_0_0_pi2_pi2";

/// Evaluates a uniform grid over one parameter (points run concurrently,
/// rows are written in grid order).
int cmd_sweep(const RunConfig& config, const SweepOptions& options, const Io& io);

}  // namespace isingcn::tools

#endif  // ISINGCN_TOOLS_COMMANDS_HPP_
