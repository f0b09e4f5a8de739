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

#include "isingcn/calibrate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "isingcn/nelder_mead.hpp"
#include "isingcn/propagator.hpp"

namespace isingcn {

namespace {

constexpr double kInvPhi = 0.6180339887498949;  // (sqrt(5) - 1) / 2

template <typename F>
std::pair<double, double> golden_maximize(F&& f, double lo, double hi, double tol) {
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return {a, b};
}

double nominal_pi(const PulseSpec& pulse) {
  if (!(pulse.a2 > 0.0)) throw InvalidInput("pi-pulse calibration requires a2 > 0");
  return std::numbers::pi / pulse.a2;
}

}  // namespace

double transfer_probability(const SystemParams& params, const PulseSpec& pulse, double t) {
  const Propagator prop(build_generator(params, pulse));
  return std::norm(prop.matrix(t)(2, 3));
}

double calibrate_pi_duration(const SystemParams& params, const PulseSpec& pulse_template) {
  PulseSpec pulse = pulse_template;
  pulse.duration = 0.0;
  const double tau0 = nominal_pi(pulse);
  const Propagator prop(build_generator(params, pulse));
  const QState from11 = digital_state(3);

  auto transfer = [&](double t) { return std::norm(prop.matrix(t)(2, 3)); };
  auto slope = [&](double t) {
    const QState c = prop.evolve(from11, t);
    const QState dc = prop.derivative(from11, t);
    return 2.0 * std::real(std::conj(c[2]) * dc[2]);
  };

  const double lo = kPiBracketLow * tau0;
  const double hi = kPiBracketHigh * tau0;
  const double tol = kPiSearchTolerance * tau0;
  auto [a, b] = golden_maximize(transfer, lo, hi, tol);

  if (a - lo <= tol || hi - b <= tol) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "no interior transfer maximum in [" << lo << ", " << hi << "]: transfer(" << lo
        << ") = " << transfer(lo) << ", transfer(" << hi << ") = " << transfer(hi);
    throw InvalidInput(msg.str());
  }

  // Bisection on d|c10|^2/dt resolves the optimum far below the golden width.
  double left = std::max(lo, a - tol);
  double right = std::min(hi, b + tol);
  if (slope(left) > 0.0 && slope(right) < 0.0) {
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (left + right);
      if (mid <= left || mid >= right) break;
      (slope(mid) > 0.0 ? left : right) = mid;
    }
    return 0.5 * (left + right);
  }
  return 0.5 * (a + b);
}

double gate_infidelity(const SystemParams& params, const PulseSpec& pulse,
                       const GateMatrix& target) {
  return 1.0 - gate_fidelity(tomography(params, pulse, Frame::kRaw), target);
}

double pure_cn_objective(const SystemParams& params, const PulseSpec& pulse) {
  return gate_infidelity(params, pulse, icn_matrix());
}

std::string_view to_string(FreeParameter p) {
  switch (p) {
    case FreeParameter::kOmega1:
      return "omega1";
    case FreeParameter::kA2:
      return "a2";
    case FreeParameter::kDuration:
      return "duration";
  }
  return "?";
}

FreeParameter parse_free_parameter(std::string_view text) {
  if (text == "omega1") return FreeParameter::kOmega1;
  if (text == "a2") return FreeParameter::kA2;
  if (text == "duration") return FreeParameter::kDuration;
  throw InvalidInput("unknown free parameter '" + std::string(text) +
                     "' (expected omega1, a2 or duration)");
}

std::vector<FreeParameter> parse_free_parameters(std::string_view text) {
  std::vector<FreeParameter> out;
  for (;;) {
    const auto comma = text.find(',');
    out.push_back(parse_free_parameter(text.substr(0, comma)));
    if (comma == std::string_view::npos) return out;
    text.remove_prefix(comma + 1);
  }
}

void SearchSpec::validate() const {
  if (free.empty()) throw InvalidInput("search needs at least one free parameter");
  for (std::size_t i = 0; i < free.size(); ++i) {
    for (std::size_t k = i + 1; k < free.size(); ++k) {
      if (free[i] == free[k]) throw InvalidInput("free parameter listed twice");
    }
  }
  if (!(window > 0.0) || !std::isfinite(window)) throw InvalidInput("search window must be positive");
  if (window >= 1.0) throw InvalidInput("search window must be below 100%");
  if (max_evaluations < 1) throw InvalidInput("max_evaluations must be at least 1");
  if (!(tolerance >= 0.0)) throw InvalidInput("tolerance must be non-negative");
}

namespace {

struct Point {
  SystemParams system;
  PulseSpec pulse;
};

bool has(const std::vector<FreeParameter>& free, FreeParameter p) {
  return std::find(free.begin(), free.end(), p) != free.end();
}

double& slot(Point& p, FreeParameter f) {
  switch (f) {
    case FreeParameter::kOmega1:
      return p.system.omega1;
    case FreeParameter::kA2:
      return p.pulse.a2;
    case FreeParameter::kDuration:
      return p.pulse.duration;
  }
  return p.pulse.duration;
}

}  // namespace

TuneResult tune_pure_cn(const SystemParams& start_system, const PulseSpec& start_pulse,
                        const SearchSpec& spec) {
  spec.validate();
  start_system.validate_for_gate();
  build_generator(start_system, start_pulse);

  const bool duration_free = has(spec.free, FreeParameter::kDuration);

  // Fills in the dependent quantities of a candidate point.
  auto complete = [&](Point p) {
    p.pulse.carrier = p.system.resonant_carrier();
    if (spec.tie_a1) p.pulse.a1 = p.pulse.a2 * p.system.omega1 / p.system.omega2;
    if (!duration_free) p.pulse.duration = calibrate_pi_duration(p.system, p.pulse);
    return p;
  };

  Point start{start_system, start_pulse};
  if (spec.tie_a1) start.pulse.a1 = start.pulse.a2 * start.system.omega1 / start.system.omega2;
  if (duration_free && !(start.pulse.duration > 0.0)) {
    start.pulse.duration = calibrate_pi_duration(start.system, start.pulse);
  }

  const std::size_t n = spec.free.size();
  std::vector<double> x0(n);
  Box box{std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t k = 0; k < n; ++k) {
    x0[k] = slot(start, spec.free[k]);
    box.lower[k] = x0[k] - spec.window * std::abs(x0[k]);
    box.upper[k] = x0[k] + spec.window * std::abs(x0[k]);
  }

  auto materialize = [&](std::span<const double> x) {
    Point p = start;
    for (std::size_t k = 0; k < n; ++k) slot(p, spec.free[k]) = x[k];
    return complete(p);
  };
  auto objective = [&](std::span<const double> x) {
    try {
      const Point p = materialize(x);
      return gate_infidelity(p.system, p.pulse, spec.target);
    } catch (const InvalidInput&) {
      return std::numeric_limits<double>::infinity();
    }
  };

  const double f0 = objective(x0);
  if (f0 <= kZeroObjective) {
    const Point p = materialize(x0);
    return {p.system, p.pulse, f0, 1, true};
  }

  std::vector<std::vector<double>> simplex(n + 1, x0);
  for (std::size_t k = 0; k < n; ++k) simplex[k + 1][k] *= 1.0025;

  NelderMeadOptions options;
  options.max_evaluations = std::max(1, spec.max_evaluations - 1);
  const NelderMeadResult nm = nelder_mead(objective, simplex, box, options);

  const Point best = materialize(nm.x);
  return {best.system, best.pulse, nm.f, nm.evaluations + 1, nm.f <= spec.tolerance};
}

DurationScan calibrate_cn_duration(const SystemParams& params, const PulseSpec& pulse_template,
                                   const GateMatrix& target) {
  PulseSpec pulse = pulse_template;
  pulse.duration = 0.0;
  const double tau0 = nominal_pi(pulse);
  const Propagator prop(build_generator(params, pulse));

  auto infidelity = [&](double t) { return 1.0 - gate_fidelity(GateMatrix(prop.matrix(t)), target); };

  const auto& ev = prop.eigenvalues();
  const double rate = 0.5 * (ev.maxCoeff() - ev.minCoeff());
  const double lo = kPiBracketLow * tau0;
  const double hi = kPiBracketHigh * tau0;
  const double step = rate > 0.0 ? 2.0 * std::numbers::pi / rate / 32.0 : (hi - lo) / 1000.0;
  const auto count = static_cast<long long>(std::ceil((hi - lo) / step));

  double best_t = lo;
  double best_f = infidelity(lo);
  for (long long i = 1; i <= count; ++i) {
    const double t = std::min(hi, lo + static_cast<double>(i) * step);
    const double f = infidelity(t);
    if (f < best_f) {
      best_f = f;
      best_t = t;
    }
  }

  auto fidelity = [&](double t) { return -infidelity(t); };
  auto [a, b] = golden_maximize(fidelity, std::max(lo, best_t - step), std::min(hi, best_t + step),
                                1e-12 * tau0);
  const double t = 0.5 * (a + b);
  const double f = infidelity(t);
  if (f < best_f) return {t, f};
  return {best_t, best_f};
}

}  // namespace isingcn
