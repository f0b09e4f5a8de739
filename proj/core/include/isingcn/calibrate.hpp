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

#ifndef ISINGCN_CALIBRATE_HPP_
#define ISINGCN_CALIBRATE_HPP_

#include <string_view>
#include <vector>

#include "isingcn/gate_lab.hpp"
#include "isingcn/spin_core.hpp"

namespace isingcn {

/// The pi-pulse search bracket, as fractions of the nominal pi / a2.
inline constexpr double kPiBracketLow = 0.8;
inline constexpr double kPiBracketHigh = 1.2;
/// Golden-section stopping width, relative to pi / a2.
inline constexpr double kPiSearchTolerance = 1e-6;

/// |c_10(t)|^2 after evolving |11> for time t.
double transfer_probability(const SystemParams& params, const PulseSpec& pulse, double t);

/// Duration that maximizes population transfer |11> -> |10>.
///
/// Golden-section search over [0.8, 1.2] * pi / a2 down to a width of
/// 1e-6 * pi / a2, then the final interval is narrowed further by bisection
/// on the analytic derivative of the transfer so that sub-tolerance shifts
/// of the optimum (such as the one induced by the a1 drive) are resolved.
/// The pulse duration field is ignored. Throws InvalidInput for a2 <= 0,
/// an off-resonant carrier, or when the maximum sits on a bracket endpoint.
double calibrate_pi_duration(const SystemParams& params, const PulseSpec& pulse_template);

/// 1 - gate_fidelity(raw tomography, target).
double gate_infidelity(const SystemParams& params, const PulseSpec& pulse, const GateMatrix& target);

/// Infidelity of the raw-frame gate against i * CN.
double pure_cn_objective(const SystemParams& params, const PulseSpec& pulse);

enum class FreeParameter { kOmega1, kA2, kDuration };

std::string_view to_string(FreeParameter p);
FreeParameter parse_free_parameter(std::string_view text);
/// Parses a comma-separated list such as "omega1,a2,duration".
std::vector<FreeParameter> parse_free_parameters(std::string_view text);

struct SearchSpec {
  std::vector<FreeParameter> free;
  /// Relative half-width of the box around each starting value.
  double window = 0.005;
  /// Hold a1 = a2 * omega1 / omega2 at every evaluated point.
  bool tie_a1 = false;
  GateMatrix target = icn_matrix();
  int max_evaluations = 2000;
  /// Objective value at or below which the search counts as converged.
  double tolerance = 1e-6;

  void validate() const;
};

struct TuneResult {
  SystemParams system;
  PulseSpec pulse;
  double objective = 0.0;
  int evaluations = 0;
  bool converged = false;
};

/// Objective values at or below this are treated as an exact zero; a start
/// point this good is returned without building a simplex.
inline constexpr double kZeroObjective = 1e-12;

/// Searches the free parameters for a pulse whose raw-frame gate matches
/// spec.target. The initial simplex is the start point plus one vertex per
/// free coordinate scaled by 1.0025. When duration is not free it is
/// recalibrated with calibrate_pi_duration at every evaluation. The result
/// always lies inside the box. Running out of evaluations is reported
/// through `converged`, not thrown.
TuneResult tune_pure_cn(const SystemParams& start_system, const PulseSpec& start_pulse,
                        const SearchSpec& spec);

struct DurationScan {
  double duration = 0.0;
  double objective = 0.0;
};

/// Global search of the pulse duration alone over the pi-pulse bracket for
/// the best match to `target`: a dense grid (32 points per period of the
/// fastest phase rate) refined by golden section around the best cell.
DurationScan calibrate_cn_duration(const SystemParams& params, const PulseSpec& pulse_template,
                                   const GateMatrix& target = icn_matrix());

}  // namespace isingcn

#endif  // ISINGCN_CALIBRATE_HPP_
