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

#ifndef ISINGCN_SPIN_CORE_HPP_
#define ISINGCN_SPIN_CORE_HPP_

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace isingcn {

using Complex = std::complex<double>;

inline constexpr std::size_t kDim = 4;
inline constexpr double kDefaultNormTolerance = 1e-9;

/// Basis order used by every vector, matrix and CSV column in this library.
/// The first digit labels the control spin (spin 1), the second the target
/// spin (spin 2).
inline constexpr std::array<std::string_view, kDim> kBasisLabels = {"00", "01", "10", "11"};

enum class Frame { kRaw, kPrimed };

std::string_view to_string(Frame frame);
Frame parse_frame(std::string_view text);

/// Returns the index of `label` in the basis order, or nullopt.
std::optional<std::size_t> basis_index(std::string_view label);

/// Thrown when an input violates a documented precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Static two-spin system. All values are angular frequencies in the same
/// dimensionless unit.
struct SystemParams {
  double omega1 = 0.0;
  double omega2 = 0.0;
  double coupling_j = 0.0;

  /// Carrier that drives |10> <-> |11> (target flip with control up).
  double resonant_carrier() const { return omega2 - coupling_j; }

  void validate() const;
  /// validate() plus J != 0, which gate scenarios need so that the
  /// conditional line at omega2 - J differs from omega2 + J.
  void validate_for_gate() const;

  friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

enum class Envelope { kRectangular };

/// One rectangular circularly polarized pulse, on for t in [0, duration].
struct PulseSpec {
  double carrier = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  double duration = 0.0;
  Envelope envelope = Envelope::kRectangular;

  void validate() const;

  friend bool operator==(const PulseSpec&, const PulseSpec&) = default;
};

/// Four complex amplitudes c_00, c_01, c_10, c_11.
///
/// Construction through the public constructor is unchecked; it is used for
/// propagated states. digital_state() and superposition_state() are the
/// validated entry points for physical input.
class QState {
 public:
  QState() = default;
  explicit QState(const std::array<Complex, kDim>& amplitudes) : amps_(amplitudes) {}

  const Complex& operator[](std::size_t i) const { return amps_[i]; }
  Complex& operator[](std::size_t i) { return amps_[i]; }
  const std::array<Complex, kDim>& amplitudes() const { return amps_; }

  double norm_squared() const;
  bool is_finite() const;

  /// Throws InvalidInput if |norm^2 - 1| > tol.
  void validate(double tol = kDefaultNormTolerance) const;

  friend bool operator==(const QState&, const QState&) = default;

 private:
  std::array<Complex, kDim> amps_{};
};

/// Largest componentwise |a_i - b_i|.
double max_abs_diff(const QState& a, const QState& b);

QState digital_state(std::string_view label);
QState digital_state(std::size_t index);

/// Validates (or, with `normalize`, rescales) four amplitudes into a state.
QState superposition_state(const std::array<Complex, kDim>& amps, bool normalize = false,
                           double tol = kDefaultNormTolerance);

/// The superposition with c00 = sqrt(3/10), c01 = 1/sqrt(5), c10 = 1/sqrt(3),
/// c11 = 1/sqrt(6) used throughout the reference scenarios.
QState reference_superposition();

/// Phase shifts of a generalized Control-Not gate, radians in (-pi, pi].
struct GcnPhases {
  double dphi00 = 0.0;
  double dphi01 = 0.0;
  double dphi10 = 0.0;
  double dphi11 = 0.0;
};

/// Maps an angle into (-pi, pi].
double wrap_phase(double angle);

struct TimeSample {
  double t = 0.0;
  QState state;
  double norm = 0.0;
};

/// Sampled evolution of one initial state, in one frame.
struct TimeSeries {
  Frame frame = Frame::kPrimed;
  std::vector<TimeSample> rows;

  /// Checks strictly increasing t (a zero-duration series may hold two rows at
  /// t = 0) and that every norm field matches the
  /// recomputed norm within `norm_tol`.
  void validate(double norm_tol = 1e-12) const;
};

}  // namespace isingcn

#endif  // ISINGCN_SPIN_CORE_HPP_
