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

#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <thread>
#include <vector>

#include "isingcn/csv.hpp"
#include "isingcn/gate_lab.hpp"
#include "isingcn/propagator.hpp"

namespace isingcn::tools {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs `emit` against the configured output file, or io.out when none is set.
void with_output(const RunConfig& config, const Io& io, const std::function<void(std::ostream&)>& emit) {
  if (!config.out || *config.out == "-") {
    emit(io.out);
    return;
  }
  std::ofstream file(*config.out, std::ios::binary | std::ios::trunc);
  if (!file) throw InvalidInput("cannot write output file '" + *config.out + "'");
  emit(file);
  file.flush();
  if (!file) throw InvalidInput("error while writing '" + *config.out + "'");
}

std::string destination(const RunConfig& config) {
  return config.out && *config.out != "-" ? *config.out : "<stdout>";
}

GateMatrix half_pi_gcn_gate() {
  constexpr double half_pi = std::numbers::pi / 2.0;
  return gcn_matrix({0.0, 0.0, half_pi, half_pi});
}

}  // namespace

RunConfig load_run_config(const std::optional<std::string>& config_path,
                          const std::optional<std::string>& preset, const Overrides& overrides) {
  if (!config_path && !preset) throw InvalidInput("either --config or --preset is required");
  std::string text;
  if (preset) text += "preset = " + *preset + "\n";
  if (config_path) text += read_file(*config_path);
  RunConfig c = parse_config(text);

  if (overrides.initial) {
    parse_initial(*overrides.initial);
    c.initial = *overrides.initial;
  }
  if (overrides.frame) c.frame = parse_frame(*overrides.frame);
  if (overrides.out) c.out = *overrides.out;
  if (overrides.duration) {
    if (*overrides.duration == "auto") {
      c.duration_auto = true;
      c.pulse.duration = 0.0;
    } else {
      double v = 0.0;
      const auto& s = *overrides.duration;
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size() || !(v >= 0.0)) {
        throw InvalidInput("--duration expects a non-negative number or 'auto'");
      }
      c.duration_auto = false;
      c.pulse.duration = v;
    }
  }
  if (overrides.sample_dt) {
    if (!(*overrides.sample_dt > 0.0)) throw InvalidInput("--sample-dt must be positive");
    c.sample_dt = overrides.sample_dt;
  }
  return c;
}

int cmd_simulate(const RunConfig& config, const Io& io) {
  if (!config.initial) throw InvalidInput("simulate needs an initial state (initial = ... or --initial)");
  const QState initial = parse_initial(*config.initial);
  const PulseSpec pulse = resolved_pulse(config);
  const double dt = config.sample_dt.value_or(pulse.duration > 0.0 ? pulse.duration / 1000.0 : 1.0);
  const TimeSeries series = run_timeseries(config.system, pulse, initial, dt, config.frame);

  with_output(config, io, [&](std::ostream& os) { write_timeseries_csv(os, series); });

  const auto& last = series.rows.back();
  io.log << "simulate: " << series.rows.size() << " rows (" << to_string(config.frame)
         << " frame) to " << destination(config) << "\n";
  io.log << "simulate: duration = " << format_number(pulse.duration) << "\n";
  for (std::size_t i = 0; i < kDim; ++i) {
    io.log << "simulate: c" << kBasisLabels[i] << "(tau) = " << format_number(last.state[i].real())
           << (last.state[i].imag() < 0 ? " - " : " + ") << format_number(std::abs(last.state[i].imag()))
           << "i\n";
  }
  return kExitOk;
}

int cmd_tomography(const RunConfig& config, const Io& io) {
  const PulseSpec pulse = resolved_pulse(config);
  const GateMatrix gate = tomography(config.system, pulse, config.frame);
  const double fid_cn = gate_fidelity(gate, cn_matrix());
  const double fid_icn = gate_fidelity(gate, icn_matrix());

  std::optional<GcnPhases> phases;
  std::optional<GcnPatternError> violation;
  try {
    phases = extract_gcn_phases(gate);
  } catch (const GcnPatternError& e) {
    violation = e;
  }

  std::ostringstream tail;
  tail << "# fidelity_cn = " << format_number(fid_cn) << '\n';
  tail << "# fidelity_icn = " << format_number(fid_icn) << '\n';
  if (phases) {
    tail << "# gcn = ok\n";
    tail << "# dphi00 = " << format_number(phases->dphi00) << '\n';
    tail << "# dphi01 = " << format_number(phases->dphi01) << '\n';
    tail << "# dphi10 = " << format_number(phases->dphi10) << '\n';
    tail << "# dphi11 = " << format_number(phases->dphi11) << '\n';
  } else {
    tail << "# gcn = violated\n";
    tail << "# leak_modulus = " << format_number(violation->modulus()) << '\n';
    tail << "# leak_entry = " << kBasisLabels[violation->row()] << ',' << kBasisLabels[violation->col()]
         << '\n';
  }

  with_output(config, io, [&](std::ostream& os) {
    os << "# frame = " << to_string(config.frame) << '\n';
    os << "# duration = " << format_number(pulse.duration) << '\n';
    write_gate_csv(os, gate);
    os << tail.str();
  });

  io.log << "tomography: frame = " << to_string(config.frame)
         << ", duration = " << format_number(pulse.duration) << "\n";
  io.log << "tomography: fidelity vs CN = " << format_number(fid_cn)
         << ", vs i*CN = " << format_number(fid_icn) << "\n";
  if (phases) {
    io.log << "tomography: GCN phases (dphi00, dphi01, dphi10, dphi11) = (" << format_number(phases->dphi00)
           << ", " << format_number(phases->dphi01) << ", " << format_number(phases->dphi10) << ", "
           << format_number(phases->dphi11) << ")\n";
    return kExitOk;
  }
  io.log << "tomography: " << violation->what() << "\n";
  return kExitGcnViolation;
}

int cmd_calibrate(const RunConfig& config, const CalibrateOptions& options, const Io& io) {
  if (!options.pi_duration && !options.pure_cn && !options.cn_duration) {
    throw InvalidInput("calibrate needs --pi-duration, --pure-cn and/or --cn-duration");
  }
  RunConfig tuned = config;
  tuned.out.reset();
  std::ostringstream header;
  header << "isingcn calibrate report\n";
  bool converged = true;

  if (options.pi_duration) {
    const double tau = calibrate_pi_duration(tuned.system, tuned.pulse);
    const double nominal = std::numbers::pi / tuned.pulse.a2;
    tuned.pulse.duration = tau;
    tuned.duration_auto = false;
    header << "pi_duration = " << format_number(tau) << "\n";
    header << "pi_nominal = " << format_number(nominal) << "\n";
    header << "pi_relative_shift = " << format_number(tau / nominal - 1.0) << "\n";
    header << "pi_transfer = " << format_number(transfer_probability(tuned.system, tuned.pulse, tau)) << "\n";
    io.log << "calibrate: pi duration " << format_number(tau) << " (pi/a2 = " << format_number(nominal)
           << ", relative shift " << format_number(tau / nominal - 1.0) << ")\n";
  }
  if (options.cn_duration) {
    const DurationScan scan = calibrate_cn_duration(tuned.system, tuned.pulse, options.search.target);
    tuned.pulse.duration = scan.duration;
    tuned.duration_auto = false;
    header << "cn_duration = " << format_number(scan.duration) << "\n";
    header << "cn_duration_objective = " << format_number(scan.objective) << "\n";
    io.log << "calibrate: duration scan " << format_number(scan.duration) << ", objective "
           << format_number(scan.objective) << "\n";
  }
  if (options.pure_cn) {
    PulseSpec start = tuned.pulse;
    if (tuned.duration_auto) start.duration = 0.0;
    const TuneResult r = tune_pure_cn(tuned.system, start, options.search);
    tuned.system = r.system;
    tuned.pulse = r.pulse;
    tuned.duration_auto = false;
    converged = r.converged;
    header << "objective = " << format_number(r.objective) << "\n";
    header << "evaluations = " << r.evaluations << "\n";
    header << "converged = " << (r.converged ? "true" : "false") << "\n";
    io.log << "calibrate: pure-CN objective " << format_number(r.objective) << " after " << r.evaluations
           << " evaluations (" << (r.converged ? "converged" : "NOT converged") << ")\n";
    io.log << "calibrate: omega1 = " << format_number(r.system.omega1) << ", a1 = " << format_number(r.pulse.a1)
           << ", a2 = " << format_number(r.pulse.a2) << ", duration = " << format_number(r.pulse.duration)
           << "\n";
  }

  std::string h = header.str();
  if (!h.empty() && h.back() == '\n') h.pop_back();
  with_output(config, io, [&](std::ostream& os) { os << format_config(tuned, h); });
  return converged ? kExitOk : kExitNotConverged;
}

int cmd_sweep(const RunConfig& config, const SweepOptions& options, const Io& io) {
  if (options.steps < 1) throw InvalidInput("--steps must be at least 1");
  static const std::vector<std::string> params = {"omega1", "omega2", "coupling_j", "a1", "a2", "duration"};
  if (std::find(params.begin(), params.end(), options.param) == params.end()) {
    throw InvalidInput("unknown sweep parameter '" + options.param + "'");
  }

  struct Row {
    double value = 0.0;
    double duration = 0.0;
    double transfer = 0.0;
    double fid_cn = 0.0;
    double fid_icn = 0.0;
    double fid_gcn = 0.0;
    std::string error;
  };
  const auto n = static_cast<std::size_t>(options.steps);
  std::vector<Row> rows(n);
  const GateMatrix half_pi_gcn = half_pi_gcn_gate();

  auto evaluate = [&](std::size_t i) {
    Row& row = rows[i];
    row.value = n == 1 ? options.from
                       : options.from + (options.to - options.from) * static_cast<double>(i) /
                                            static_cast<double>(n - 1);
    try {
      SystemParams sys = config.system;
      PulseSpec pulse = config.pulse;
      bool auto_duration = config.duration_auto;
      if (options.param == "omega1") sys.omega1 = row.value;
      if (options.param == "omega2") sys.omega2 = row.value;
      if (options.param == "coupling_j") sys.coupling_j = row.value;
      if (options.param == "a1") pulse.a1 = row.value;
      if (options.param == "a2") pulse.a2 = row.value;
      if (options.param == "duration") {
        pulse.duration = row.value;
        auto_duration = false;
      }
      pulse.carrier = sys.resonant_carrier();
      if (auto_duration) pulse.duration = calibrate_pi_duration(sys, pulse);
      const GateMatrix gate = tomography(sys, pulse, config.frame);
      row.duration = pulse.duration;
      row.transfer = std::norm(gate(2, 3));
      row.fid_cn = gate_fidelity(gate, cn_matrix());
      row.fid_icn = gate_fidelity(gate, icn_matrix());
      row.fid_gcn = gate_fidelity(gate, half_pi_gcn);
    } catch (const InvalidInput& e) {
      row.error = e.what();
    }
  };

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) evaluate(i);
    });
  }
  pool.clear();

  std::size_t failures = 0;
  with_output(config, io, [&](std::ostream& os) {
    os << kSweepHeader << '\n';
    for (std::size_t i = 0; i < n; ++i) {
      const Row& r = rows[i];
      if (!r.error.empty()) {
        ++failures;
        os << "# " << i << ": " << r.error << '\n';
        continue;
      }
      os << i << ',' << format_number(r.value) << ',' << format_number(r.duration) << ','
         << format_number(r.transfer) << ',' << format_number(r.fid_cn) << ',' << format_number(r.fid_icn)
         << ',' << format_number(r.fid_gcn) << '\n';
    }
  });
  io.log << "sweep: " << n << " points over " << options.param << " (" << failures << " failed) to "
         << destination(config) << "\n";
  return failures ? kExitError : kExitOk;
}

}  // namespace isingcn::tools
