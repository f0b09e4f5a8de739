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

#ifndef ISINGCN_PROPAGATOR_HPP_
#define ISINGCN_PROPAGATOR_HPP_

#include <Eigen/Dense>

#include "isingcn/spin_core.hpp"

namespace isingcn {

using RealMatrix4 = Eigen::Matrix4d;
using ComplexMatrix4 = Eigen::Matrix4cd;
using ComplexVector4 = Eigen::Vector4cd;

ComplexVector4 to_vector(const QState& s);
QState from_vector(const ComplexVector4& v);

/// Real symmetric coefficient matrix B of the rotating-frame amplitude
/// equations -2i dc/dt = B c, in the (00, 01, 10, 11) basis:
///
///   B = [ -2(w2-w1-2J)   a2           a1   0  ]
///       [  a2           -2(w2-w1)     0    a1 ]
///       [  a1            0            0    a2 ]
///       [  0             a1           a2   0  ]
///
/// The constant-coefficient form only holds for the carrier w = w2 - J with
/// common phase (w2 - J - w1) t / 2.
class Generator {
 public:
  const RealMatrix4& matrix() const { return b_; }

  /// Largest |eigenvalue| of B / 2, i.e. the fastest phase rate.
  double spectral_radius() const;

 private:
  friend Generator build_generator(const SystemParams&, const PulseSpec&);
  explicit Generator(const RealMatrix4& b) : b_(b) {}
  RealMatrix4 b_;
};

/// Relative tolerance for the resonance check in build_generator.
inline constexpr double kResonanceTolerance = 1e-12;

Generator build_generator(const SystemParams& params, const PulseSpec& pulse);

/// Exact solution operator exp(i B t / 2) from a cached eigendecomposition of B.
/// Build once per generator; evaluation at any t is then a diagonal phase
/// and two 4x4 products.
class Propagator {
 public:
  explicit Propagator(const Generator& gen);

  ComplexMatrix4 matrix(double t) const;
  QState evolve(const QState& state, double t) const;
  /// dc/dt at time t for the trajectory starting from `state` at t = 0.
  QState derivative(const QState& state, double t) const;

  const Eigen::Vector4d& eigenvalues() const { return eigenvalues_; }

 private:
  Eigen::Vector4d eigenvalues_;
  RealMatrix4 eigenvectors_;
};

/// c(t) = exp(i B t / 2) c(0). Throws InvalidInput for t < 0 or invalid state.
QState evolve_exact(const QState& state, const Generator& gen, double t);

/// Classical fourth-order Runge-Kutta on dc/dt = (i/2) B c with a uniform
/// step no larger than dt. Independent reference for evolve_exact; accurate
/// only when dt * gen.spectral_radius() is small.
QState evolve_rk4(const QState& state, const Generator& gen, double t, double dt);

/// Free evolution in the rotating frame (a1 = a2 = 0).
QState free_evolve(const QState& state, double t, const SystemParams& params);

/// Strips the free-evolution phases: the inverse of free_evolve.
QState to_primed(const QState& state, double t, const SystemParams& params);

/// Diagonal of the to_primed transform at time t.
ComplexVector4 primed_phase_factors(double t, const SystemParams& params);

/// Samples t = 0, dt, 2 dt, ... and always t = pulse.duration last.
TimeSeries run_timeseries(const SystemParams& params, const PulseSpec& pulse, const QState& initial,
                          double sample_dt, Frame frame);

}  // namespace isingcn

#endif  // ISINGCN_PROPAGATOR_HPP_
