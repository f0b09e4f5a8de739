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

#include "isingcn/run_config.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>
#include <vector>

#include "isingcn/calibrate.hpp"
#include "isingcn/csv.hpp"
#include "isingcn/propagator.hpp"

namespace isingcn {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> to_double(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::string line_message(std::size_t line, const std::string& message) {
  if (line == 0) return message;
  return "line " + std::to_string(line) + ": " + message;
}

struct Entry {
  std::string value;
  std::size_t line = 0;
};

const std::array<std::string_view, 12> kKeys = {"preset", "omega1", "omega2",   "coupling_j",
                                                "carrier", "a1",    "a2",       "duration",
                                                "initial", "frame", "sample_dt", "out"};

bool known_key(std::string_view key) {
  for (auto k : kKeys) {
    if (k == key) return true;
  }
  return false;
}

Complex parse_complex(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw InvalidInput("empty amplitude");
  if (text.front() != '(') {
    const auto v = to_double(text);
    if (!v) throw InvalidInput("unparseable amplitude '" + std::string(text) + "'");
    return {*v, 0.0};
  }
  if (text.back() != ')') throw InvalidInput("unbalanced parenthesis in '" + std::string(text) + "'");
  const auto inner = text.substr(1, text.size() - 2);
  const auto comma = inner.find(',');
  const auto re = to_double(inner.substr(0, comma));
  std::optional<double> im = 0.0;
  if (comma != std::string_view::npos) im = to_double(inner.substr(comma + 1));
  if (!re || !im) throw InvalidInput("unparseable amplitude '" + std::string(text) + "'");
  return {*re, *im};
}

// Splits on commas that are not inside parentheses.
std::vector<std::string_view> split_amplitudes(std::string_view text) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t begin = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == ',' && depth == 0) {
      parts.push_back(text.substr(begin, i - begin));
      begin = i + 1;
    }
  }
  parts.push_back(text.substr(begin));
  return parts;
}

}  // namespace

ConfigError::ConfigError(std::size_t line, const std::string& message)
    : InvalidInput(line_message(line, message)), line_(line) {}

RunConfig preset_config(std::string_view name) {
  RunConfig c;
  if (name == "params12") {
    c.system = {500.0, 100.0, 5.0};
    c.pulse.a1 = 0.5;
    c.pulse.a2 = 0.1;
  } else if (name == "params24") {
    c.system = {500.06, 100.0, 5.0};
    c.pulse.a2 = 0.10016;
    c.pulse.a1 = c.pulse.a2 * c.system.omega1 / c.system.omega2;
  } else {
    throw InvalidInput("unknown preset '" + std::string(name) + "' (expected params12 or params24)");
  }
  c.pulse.carrier = c.system.resonant_carrier();
  return c;
}

QState parse_initial(std::string_view spec) {
  spec = trim(spec);
  if (spec == "superposition") return reference_superposition();
  if (spec.starts_with("digital:")) return digital_state(trim(spec.substr(8)));
  if (spec.starts_with("amps:")) {
    const auto parts = split_amplitudes(spec.substr(5));
    if (parts.size() != kDim) {
      throw InvalidInput("amps: expects exactly four amplitudes, got " + std::to_string(parts.size()));
    }
    std::array<Complex, kDim> amps;
    for (std::size_t i = 0; i < kDim; ++i) amps[i] = parse_complex(parts[i]);
    return superposition_state(amps);
  }
  throw InvalidInput("unknown initial state '" + std::string(spec) +
                     "' (expected digital:<00|01|10|11>, superposition or amps:<c>,<c>,<c>,<c>)");
}

RunConfig parse_config(std::string_view text) {
  std::map<std::string, Entry> entries;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(line_no, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (!known_key(key)) throw ConfigError(line_no, "unknown key '" + key + "'");
    if (value.empty()) throw ConfigError(line_no, "missing value for '" + key + "'");
    if (entries.count(key)) {
      throw ConfigError(line_no, "key '" + key + "' repeated (first on line " +
                                     std::to_string(entries[key].line) + ")");
    }
    entries[key] = {value, line_no};
  }

  RunConfig c;
  bool from_preset = false;
  if (auto it = entries.find("preset"); it != entries.end()) {
    try {
      c = preset_config(it->second.value);
    } catch (const InvalidInput& e) {
      throw ConfigError(it->second.line, e.what());
    }
    from_preset = true;
  }

  auto number = [&](const std::string& key, double& dst) {
    auto it = entries.find(key);
    if (it == entries.end()) {
      if (!from_preset) throw ConfigError(0, "missing required key '" + key + "'");
      return;
    }
    const auto v = to_double(it->second.value);
    if (!v) throw ConfigError(it->second.line, "cannot parse '" + it->second.value + "' as a number");
    dst = *v;
  };

  number("omega1", c.system.omega1);
  number("omega2", c.system.omega2);
  number("coupling_j", c.system.coupling_j);
  number("a2", c.pulse.a2);

  // a1 may be tied to a2 * omega1 / omega2 (params24 ties it by default);
  // resolved after the values it depends on.
  bool a1_tied = from_preset && entries.at("preset").value == "params24";
  if (auto it = entries.find("a1"); it != entries.end()) {
    a1_tied = it->second.value == "tied";
    if (!a1_tied) number("a1", c.pulse.a1);
  } else if (!from_preset) {
    throw ConfigError(0, "missing required key 'a1'");
  }
  if (a1_tied) c.pulse.a1 = c.pulse.a2 * c.system.omega1 / c.system.omega2;

  c.pulse.carrier = c.system.resonant_carrier();
  if (auto it = entries.find("carrier"); it != entries.end() && it->second.value != "auto") {
    number("carrier", c.pulse.carrier);
  }

  c.duration_auto = true;
  c.pulse.duration = 0.0;
  if (auto it = entries.find("duration"); it != entries.end() && it->second.value != "auto") {
    number("duration", c.pulse.duration);
    c.duration_auto = false;
  }

  auto line_of = [&](const std::string& key) {
    auto it = entries.find(key);
    return it == entries.end() ? std::size_t{0} : it->second.line;
  };

  try {
    c.system.validate();
  } catch (const InvalidInput& e) {
    throw ConfigError(line_of("omega1"), e.what());
  }
  try {
    c.pulse.validate();
  } catch (const InvalidInput& e) {
    throw ConfigError(0, e.what());
  }
  const double resonant = c.system.resonant_carrier();
  if (std::abs(c.pulse.carrier - resonant) >
      kResonanceTolerance * std::max({std::abs(resonant), std::abs(c.pulse.carrier), 1.0})) {
    throw ConfigError(line_of("carrier"), "carrier must equal omega2 - coupling_j (" +
                                              format_number(resonant) + ")");
  }

  if (auto it = entries.find("initial"); it != entries.end()) {
    try {
      parse_initial(it->second.value);
    } catch (const InvalidInput& e) {
      throw ConfigError(it->second.line, e.what());
    }
    c.initial = it->second.value;
  }
  if (auto it = entries.find("frame"); it != entries.end()) {
    try {
      c.frame = parse_frame(it->second.value);
    } catch (const InvalidInput& e) {
      throw ConfigError(it->second.line, e.what());
    }
  }
  if (auto it = entries.find("sample_dt"); it != entries.end()) {
    double dt = 0.0;
    number("sample_dt", dt);
    if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError(it->second.line, "sample_dt must be positive");
    c.sample_dt = dt;
  }
  if (auto it = entries.find("out"); it != entries.end()) c.out = it->second.value;
  return c;
}

std::string format_config(const RunConfig& config, std::string_view header) {
  std::ostringstream os;
  std::string_view rest = header;
  while (!rest.empty()) {
    const auto nl = rest.find('\n');
    os << "# " << rest.substr(0, nl) << '\n';
    if (nl == std::string_view::npos) break;
    rest.remove_prefix(nl + 1);
  }
  os << "omega1 = " << format_number(config.system.omega1) << '\n';
  os << "omega2 = " << format_number(config.system.omega2) << '\n';
  os << "coupling_j = " << format_number(config.system.coupling_j) << '\n';
  os << "carrier = " << format_number(config.pulse.carrier) << '\n';
  os << "a1 = " << format_number(config.pulse.a1) << '\n';
  os << "a2 = " << format_number(config.pulse.a2) << '\n';
  os << "duration = " << (config.duration_auto ? "auto" : format_number(config.pulse.duration)) << '\n';
  if (config.initial) os << "initial = " << *config.initial << '\n';
  os << "frame = " << to_string(config.frame) << '\n';
  if (config.sample_dt) os << "sample_dt = " << format_number(*config.sample_dt) << '\n';
  if (config.out) os << "out = " << *config.out << '\n';
  return os.str();
}

PulseSpec resolved_pulse(const RunConfig& config) {
  PulseSpec p = config.pulse;
  if (config.duration_auto) p.duration = calibrate_pi_duration(config.system, p);
  return p;
}

}  // namespace isingcn
