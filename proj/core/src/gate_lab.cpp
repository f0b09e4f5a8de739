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

#include "isingcn/gate_lab.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <utility>

namespace isingcn {

namespace {

// (row, col) of the nonzero entries of a GCN gate.
constexpr std::array<std::pair<int, int>, 4> kGcnPattern = {{{0, 0}, {1, 1}, {3, 2}, {2, 3}}};

bool in_pattern(int row, int col) {
  for (const auto& [r, c] : kGcnPattern) {
    if (r == row && c == col) return true;
  }
  return false;
}

std::string format_error(double modulus, std::size_t row, std::size_t col, bool off_pattern) {
  std::ostringstream msg;
  msg.precision(6);
  if (off_pattern) {
    msg << "gate is not a generalized CN: off-pattern entry (" << kBasisLabels[row] << ","
        << kBasisLabels[col] << ") has modulus " << modulus;
  } else {
    msg << "gate is not a generalized CN: pattern entry (" << kBasisLabels[row] << ","
        << kBasisLabels[col] << ") has modulus " << modulus;
  }
  return msg.str();
}

}  // namespace

double GateMatrix::unitarity_error() const {
  return (entries.adjoint() * entries - ComplexMatrix4::Identity()).cwiseAbs().maxCoeff();
}

GateMatrix operator*(Complex scalar, const GateMatrix& gate) {
  return GateMatrix(scalar * gate.entries);
}

GateMatrix operator*(const GateMatrix& a, const GateMatrix& b) {
  return GateMatrix(a.entries * b.entries);
}

GateMatrix cn_matrix() { return gcn_matrix({}); }

GateMatrix gcn_matrix(const GcnPhases& phases) {
  auto e = [](double phi) { return std::polar(1.0, phi); };
  ComplexMatrix4 m = ComplexMatrix4::Zero();
  m(0, 0) = e(phases.dphi00);
  m(1, 1) = e(phases.dphi01);
  m(2, 3) = e(phases.dphi11);
  m(3, 2) = e(phases.dphi10);
  return GateMatrix(m);
}

GateMatrix icn_matrix() { return Complex(0.0, 1.0) * cn_matrix(); }

GateMatrix tomography(const SystemParams& params, const PulseSpec& pulse, Frame frame) {
  const Propagator prop(build_generator(params, pulse));
  ComplexMatrix4 m = prop.matrix(pulse.duration);
  if (frame == Frame::kPrimed) {
    m = primed_phase_factors(pulse.duration, params).asDiagonal() * m;
  }
  return GateMatrix(m);
}

GcnPatternError::GcnPatternError(double modulus, std::size_t row, std::size_t col, bool off_pattern)
    : std::runtime_error(format_error(modulus, row, col, off_pattern)),
      modulus_(modulus),
      row_(row),
      col_(col),
      off_pattern_(off_pattern) {}

std::string describe(const GcnPatternError& err) { return err.what(); }

GcnPhases extract_gcn_phases(const GateMatrix& gate, double leak_tol) {
  if (!gate.entries.allFinite()) throw InvalidInput("gate has non-finite entries");
  if (gate.unitarity_error() > 1e-6) {
    throw InvalidInput("gate is not unitary within 1e-6");
  }

  double worst_leak = -1.0;
  int leak_row = 0;
  int leak_col = 0;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (in_pattern(r, c)) continue;
      const double mod = std::abs(gate.entries(r, c));
      if (mod > worst_leak) {
        worst_leak = mod;
        leak_row = r;
        leak_col = c;
      }
    }
  }
  if (worst_leak > leak_tol) {
    throw GcnPatternError(worst_leak, static_cast<std::size_t>(leak_row),
                          static_cast<std::size_t>(leak_col), true);
  }
  for (const auto& [r, c] : kGcnPattern) {
    const double mod = std::abs(gate.entries(r, c));
    if (mod < 1.0 - leak_tol) {
      throw GcnPatternError(mod, static_cast<std::size_t>(r), static_cast<std::size_t>(c), false);
    }
  }

  const double global = std::arg(gate.entries(0, 0));
  GcnPhases p;
  p.dphi00 = 0.0;
  p.dphi01 = wrap_phase(std::arg(gate.entries(1, 1)) - global);
  p.dphi11 = wrap_phase(std::arg(gate.entries(2, 3)) - global);
  p.dphi10 = wrap_phase(std::arg(gate.entries(3, 2)) - global);
  return p;
}

double gate_fidelity(const GateMatrix& gate, const GateMatrix& target) {
  // Rounding can push a perfect overlap a few ulps past 1.
  return std::min(1.0, std::abs((target.entries.adjoint() * gate.entries).trace()) / 4.0);
}

}  // namespace isingcn
