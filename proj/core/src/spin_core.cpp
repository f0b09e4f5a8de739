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

#include "isingcn/spin_core.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace isingcn {

namespace {

bool finite(double x) { return std::isfinite(x); }

std::string valid_labels() { return "00, 01, 10, 11"; }

}  // namespace

std::string_view to_string(Frame frame) { return frame == Frame::kRaw ? "raw" : "primed"; }

Frame parse_frame(std::string_view text) {
  if (text == "raw") return Frame::kRaw;
  if (text == "primed") return Frame::kPrimed;
  throw InvalidInput("unknown frame '" + std::string(text) + "' (expected raw or primed)");
}

std::optional<std::size_t> basis_index(std::string_view label) {
  for (std::size_t i = 0; i < kDim; ++i) {
    if (kBasisLabels[i] == label) return i;
  }
  return std::nullopt;
}

void SystemParams::validate() const {
  if (!finite(omega1) || !finite(omega2) || !finite(coupling_j)) {
    throw InvalidInput("system parameters must be finite");
  }
  if (omega1 <= 0.0 || omega2 <= 0.0) {
    throw InvalidInput("spin frequencies omega1 and omega2 must be positive");
  }
}

void SystemParams::validate_for_gate() const {
  validate();
  if (coupling_j == 0.0) {
    throw InvalidInput("coupling_j must be non-zero: the conditional transition at omega2 - J "
                       "would coincide with omega2 + J");
  }
}

void PulseSpec::validate() const {
  if (!finite(carrier) || !finite(a1) || !finite(a2) || !finite(duration)) {
    throw InvalidInput("pulse parameters must be finite");
  }
  if (carrier <= 0.0) throw InvalidInput("pulse carrier must be positive");
  if (a1 < 0.0 || a2 < 0.0) throw InvalidInput("pulse amplitudes a1, a2 must be non-negative");
  if (duration < 0.0) throw InvalidInput("pulse duration must be non-negative");
}

double QState::norm_squared() const {
  double s = 0.0;
  for (const auto& c : amps_) s += std::norm(c);
  return s;
}

bool QState::is_finite() const {
  for (const auto& c : amps_) {
    if (!finite(c.real()) || !finite(c.imag())) return false;
  }
  return true;
}

void QState::validate(double tol) const {
  if (!is_finite()) throw InvalidInput("state has non-finite amplitudes");
  const double n = norm_squared();
  if (std::abs(n - 1.0) > tol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "state is not normalized: |c|^2 = " << n << " (tolerance " << tol << ")";
    throw InvalidInput(msg.str());
  }
}

double max_abs_diff(const QState& a, const QState& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < kDim; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

QState digital_state(std::string_view label) {
  const auto idx = basis_index(label);
  if (!idx) {
    throw InvalidInput("invalid basis label '" + std::string(label) +
                       "'; valid labels are " + valid_labels());
  }
  return digital_state(*idx);
}

QState digital_state(std::size_t index) {
  if (index >= kDim) throw InvalidInput("basis index out of range; valid labels are " + valid_labels());
  QState s;
  s[index] = 1.0;
  return s;
}

QState superposition_state(const std::array<Complex, kDim>& amps, bool normalize, double tol) {
  QState s(amps);
  if (!s.is_finite()) throw InvalidInput("superposition has non-finite amplitudes");
  const double n = s.norm_squared();
  if (n == 0.0) throw InvalidInput("superposition amplitudes are all zero");
  if (normalize) {
    const double scale = 1.0 / std::sqrt(n);
    for (std::size_t i = 0; i < kDim; ++i) s[i] *= scale;
    return s;
  }
  s.validate(tol);
  return s;
}

QState reference_superposition() {
  return superposition_state({std::sqrt(3.0 / 10.0), 1.0 / std::sqrt(5.0), 1.0 / std::sqrt(3.0),
                              1.0 / std::sqrt(6.0)});
}

double wrap_phase(double angle) {
  constexpr double pi = std::numbers::pi;
  double r = std::remainder(angle, 2.0 * pi);  // [-pi, pi]
  if (r <= -pi) r += 2.0 * pi;
  return r;
}

void TimeSeries::validate(double norm_tol) const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    // A zero-duration pulse yields the start and end rows at the same t.
    const bool degenerate = rows.size() == 2 && rows[0].t == 0.0 && rows[1].t == 0.0;
    if (i > 0 && !degenerate && !(rows[i].t > rows[i - 1].t)) {
      throw InvalidInput("time series rows are not strictly increasing at row " + std::to_string(i));
    }
    if (std::abs(rows[i].norm - rows[i].state.norm_squared()) > norm_tol) {
      throw InvalidInput("time series norm column mismatch at row " + std::to_string(i));
    }
  }
}

}  // namespace isingcn
