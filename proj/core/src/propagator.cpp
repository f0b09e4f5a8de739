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

#include "isingcn/propagator.hpp"

#include <cmath>
#include <sstream>

namespace isingcn {

namespace {

const Complex kI(0.0, 1.0);

void require_time(double t, const char* what) {
  if (!std::isfinite(t) || t < 0.0) {
    throw InvalidInput(std::string(what) + " must be finite and non-negative");
  }
}

void require_state(const QState& s) {
  if (!s.is_finite()) throw InvalidInput("state has non-finite amplitudes");
}

}  // namespace

ComplexVector4 to_vector(const QState& s) {
  return ComplexVector4(s[0], s[1], s[2], s[3]);
}

QState from_vector(const ComplexVector4& v) { return QState({v(0), v(1), v(2), v(3)}); }

double Generator::spectral_radius() const {
  Eigen::SelfAdjointEigenSolver<RealMatrix4> solver(b_, Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().maxCoeff();
}

Generator build_generator(const SystemParams& params, const PulseSpec& pulse) {
  params.validate();
  pulse.validate();
  const double resonant = params.resonant_carrier();
  const double scale = std::max({std::abs(resonant), std::abs(pulse.carrier), 1.0});
  if (std::abs(pulse.carrier - resonant) > kResonanceTolerance * scale) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "carrier " << pulse.carrier << " is off resonance: the constant-coefficient amplitude "
        << "equations require carrier = omega2 - J = " << resonant;
    throw InvalidInput(msg.str());
  }

  const double w1 = params.omega1;
  const double w2 = params.omega2;
  const double j = params.coupling_j;
  RealMatrix4 b = RealMatrix4::Zero();
  b(0, 0) = -2.0 * (w2 - w1 - 2.0 * j);
  b(1, 1) = -2.0 * (w2 - w1);
  b(0, 1) = b(1, 0) = pulse.a2;
  b(0, 2) = b(2, 0) = pulse.a1;
  b(1, 3) = b(3, 1) = pulse.a1;
  b(2, 3) = b(3, 2) = pulse.a2;
  return Generator(b);
}

Propagator::Propagator(const Generator& gen) {
  if (!gen.matrix().allFinite()) throw InvalidInput("generator has non-finite entries");
  Eigen::SelfAdjointEigenSolver<RealMatrix4> solver(gen.matrix());
  if (solver.info() != Eigen::Success) {
    throw InvalidInput("eigendecomposition of the generator failed");
  }
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

ComplexMatrix4 Propagator::matrix(double t) const {
  if (t == 0.0) return ComplexMatrix4::Identity();
  ComplexVector4 phases;
  for (int k = 0; k < 4; ++k) phases(k) = std::exp(kI * (0.5 * eigenvalues_(k) * t));
  const ComplexMatrix4 v = eigenvectors_.cast<Complex>();
  return v * phases.asDiagonal() * v.transpose();
}

QState Propagator::evolve(const QState& state, double t) const {
  return from_vector(matrix(t) * to_vector(state));
}

QState Propagator::derivative(const QState& state, double t) const {
  ComplexVector4 rates;
  for (int k = 0; k < 4; ++k) {
    const double half = 0.5 * eigenvalues_(k);
    rates(k) = kI * half * std::exp(kI * (half * t));
  }
  const ComplexMatrix4 v = eigenvectors_.cast<Complex>();
  return from_vector(v * rates.asDiagonal() * (v.transpose() * to_vector(state)));
}

QState evolve_exact(const QState& state, const Generator& gen, double t) {
  require_time(t, "evolution time");
  require_state(state);
  return Propagator(gen).evolve(state, t);
}

QState evolve_rk4(const QState& state, const Generator& gen, double t, double dt) {
  require_state(state);
  if (!(dt > 0.0)) throw InvalidInput("rk4 step must be positive");
  if (!(dt <= t)) throw InvalidInput("rk4 step must not exceed the evolution time");

  // Uniform steps of at most dt that land exactly on t.
  const auto steps = static_cast<long long>(std::ceil(t / dt * (1.0 - 1e-12)));
  const double h = t / static_cast<double>(steps);
  const ComplexMatrix4 rhs = (0.5 * kI) * gen.matrix().cast<Complex>();

  ComplexVector4 c = to_vector(state);
  for (long long n = 0; n < steps; ++n) {
    const ComplexVector4 k1 = rhs * c;
    const ComplexVector4 k2 = rhs * (c + (0.5 * h) * k1);
    const ComplexVector4 k3 = rhs * (c + (0.5 * h) * k2);
    const ComplexVector4 k4 = rhs * (c + h * k3);
    c += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return from_vector(c);
}

ComplexVector4 primed_phase_factors(double t, const SystemParams& params) {
  const double w1 = params.omega1;
  const double w2 = params.omega2;
  const double j = params.coupling_j;
  return ComplexVector4(std::exp(kI * ((w2 - w1 - 2.0 * j) * t)), std::exp(kI * ((w2 - w1) * t)),
                        1.0, 1.0);
}

QState free_evolve(const QState& state, double t, const SystemParams& params) {
  require_time(t, "free evolution time");
  require_state(state);
  return from_vector(primed_phase_factors(t, params).conjugate().cwiseProduct(to_vector(state)));
}

QState to_primed(const QState& state, double t, const SystemParams& params) {
  require_time(t, "frame time");
  require_state(state);
  return from_vector(primed_phase_factors(t, params).cwiseProduct(to_vector(state)));
}

TimeSeries run_timeseries(const SystemParams& params, const PulseSpec& pulse, const QState& initial,
                          double sample_dt, Frame frame) {
  if (!(sample_dt > 0.0) || !std::isfinite(sample_dt)) {
    throw InvalidInput("sample_dt must be positive");
  }
  require_state(initial);
  const Propagator prop(build_generator(params, pulse));
  const double tau = pulse.duration;

  TimeSeries series;
  series.frame = frame;
  auto push = [&](double t) {
    QState s = prop.evolve(initial, t);
    if (frame == Frame::kPrimed) s = to_primed(s, t, params);
    series.rows.push_back({t, s, s.norm_squared()});
  };

  // Grid points within a relative 1e-9 step of tau are merged into the tau row.
  for (long long k = 0;; ++k) {
    const double t = static_cast<double>(k) * sample_dt;
    if (k > 0 && t >= tau - 1e-9 * sample_dt) break;
    push(t);
    if (tau == 0.0) break;
  }
  push(tau);
  return series;
}

}  // namespace isingcn
