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

#ifndef ISINGCN_GATE_LAB_HPP_
#define ISINGCN_GATE_LAB_HPP_

#include <cstddef>
#include <string>

#include "isingcn/propagator.hpp"
#include "isingcn/spin_core.hpp"

namespace isingcn {

/// A 4x4 gate in the (00, 01, 10, 11) basis. Column j is the image of basis
/// state j.
struct GateMatrix {
  ComplexMatrix4 entries = ComplexMatrix4::Identity();

  GateMatrix() = default;
  explicit GateMatrix(const ComplexMatrix4& m) : entries(m) {}

  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

  QState apply(const QState& s) const { return from_vector(entries * to_vector(s)); }

  /// max |U^dagger U - 1| over entries.
  double unitarity_error() const;
};

GateMatrix operator*(Complex scalar, const GateMatrix& gate);
GateMatrix operator*(const GateMatrix& a, const GateMatrix& b);

inline constexpr double kDefaultLeakTolerance = 1e-2;

/// |00><00| + |01><01| + |10><11| + |11><10|
GateMatrix cn_matrix();

/// Generalized CN. Note the crossed pairing: dphi11 sits on |10><11| (the
/// image of |11>) and dphi10 on |11><10|.
GateMatrix gcn_matrix(const GcnPhases& phases);

/// i * cn_matrix(), the gate realized by a resonant pulse in the raw frame.
GateMatrix icn_matrix();

/// Propagates each digital basis state through the pulse and stacks the
/// final states (optionally primed at t = duration) as columns.
GateMatrix tomography(const SystemParams& params, const PulseSpec& pulse, Frame frame);

/// Thrown by extract_gcn_phases when the gate is not a conditional NOT.
class GcnPatternError : public std::runtime_error {
 public:
  GcnPatternError(double modulus, std::size_t row, std::size_t col, bool off_pattern);

  double modulus() const { return modulus_; }
  std::size_t row() const { return row_; }
  std::size_t col() const { return col_; }
  /// True when the offending entry lies outside the GCN pattern (leakage);
  /// false when a pattern entry is too small.
  bool off_pattern() const { return off_pattern_; }

 private:
  double modulus_;
  std::size_t row_;
  std::size_t col_;
  bool off_pattern_;
};

/// Reads the four GCN phases off a gate, removing the global phase so that
/// dphi00 = 0. Throws InvalidInput if the gate is not unitary within 1e-6,
/// GcnPatternError if any off-pattern entry exceeds leak_tol or any pattern
/// entry falls below 1 - leak_tol.
GcnPhases extract_gcn_phases(const GateMatrix& gate, double leak_tol = kDefaultLeakTolerance);

/// |tr(target^dagger gate)| / 4. Equals 1 iff gate = exp(i a) target.
double gate_fidelity(const GateMatrix& gate, const GateMatrix& target);

std::string describe(const GcnPatternError& err);

}  // namespace isingcn

#endif  // ISINGCN_GATE_LAB_HPP_
