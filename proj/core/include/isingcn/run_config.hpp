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

#ifndef ISINGCN_RUN_CONFIG_HPP_
#define ISINGCN_RUN_CONFIG_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "isingcn/spin_core.hpp"

namespace isingcn {

/// A parse or validation failure tied to a line of a config document.
/// line() is 0 when the problem is not attributable to one line.
class ConfigError : public InvalidInput {
 public:
  ConfigError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct RunConfig {
  SystemParams system;
  /// pulse.duration is meaningful only when duration_auto is false.
  PulseSpec pulse;
  bool duration_auto = true;
  /// Initial-state spec as written ("digital:11", "superposition" or "amps:..."),
  /// already validated by parse_initial.
  std::optional<std::string> initial;
  Frame frame = Frame::kPrimed;
  std::optional<double> sample_dt;
  std::optional<std::string> out;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Named parameter tables: "params12" (omega1 = 500, omega2 = 100, J = 5,
/// a1 = 0.5, a2 = 0.1) and "params24" (omega1 = 500.06, omega2 = 100, J = 5,
/// a2 = 0.10016, a1 = a2 * omega1 / omega2). Carrier is omega2 - J.
RunConfig preset_config(std::string_view name);

/// Initial-state specs:
///   digital:<label>   one of 00, 01, 10, 11
///   superposition     reference_superposition()
///   amps:<c>,<c>,<c>,<c>   each c is "re", "(re)" or "(re,im)"; must be normalized
QState parse_initial(std::string_view spec);

/// Parses a line-based `key = value` document with `#` comments.
///
/// Keys: preset, omega1, omega2, coupling_j, carrier (number or "auto"),
/// a1 (number or "tied" for a2 * omega1 / omega2), a2, duration (number or
/// "auto"), initial, frame, sample_dt, out. A preset supplies defaults for
/// every system and pulse key; without one omega1, omega2, coupling_j, a1
/// and a2 are required. Unknown or repeated keys are rejected.
RunConfig parse_config(std::string_view text);

/// Emits `config` in the parse_config format with every number written at
/// full precision, so parse_config(format_config(c)) == c. `header` lines are
/// written first as `#` comments.
std::string format_config(const RunConfig& config, std::string_view header = {});

/// Resolves the pulse duration: the configured value, or
/// calibrate_pi_duration when it is "auto".
PulseSpec resolved_pulse(const RunConfig& config);

}  // namespace isingcn

#endif  // ISINGCN_RUN_CONFIG_HPP_
