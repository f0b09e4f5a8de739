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

#include "isingcn/csv.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <vector>

namespace isingcn {

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

void write_timeseries_csv(std::ostream& os, const TimeSeries& series) {
  os << kTimeSeriesHeader << '\n';
  for (const auto& row : series.rows) {
    os << format_number(row.t);
    for (std::size_t i = 0; i < kDim; ++i) {
      os << ',' << format_number(row.state[i].real()) << ',' << format_number(row.state[i].imag());
    }
    os << ',' << format_number(row.norm) << '\n';
  }
}

TimeSeries read_timeseries_csv(std::istream& is, Frame frame) {
  std::string line;
  if (!std::getline(is, line) || line != kTimeSeriesHeader) {
    throw InvalidInput("time series CSV: missing or unexpected header");
  }
  TimeSeries series;
  series.frame = frame;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<double> fields;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    while (p <= end) {
      double v = 0.0;
      const auto [next, ec] = std::from_chars(p, end, v);
      if (ec != std::errc()) {
        throw InvalidInput("time series CSV: bad number on line " + std::to_string(line_no));
      }
      fields.push_back(v);
      if (next == end) break;
      if (*next != ',') {
        throw InvalidInput("time series CSV: expected ',' on line " + std::to_string(line_no));
      }
      p = next + 1;
    }
    if (fields.size() != 10) {
      throw InvalidInput("time series CSV: expected 10 fields on line " + std::to_string(line_no));
    }
    TimeSample s;
    s.t = fields[0];
    for (std::size_t i = 0; i < kDim; ++i) s.state[i] = Complex(fields[1 + 2 * i], fields[2 + 2 * i]);
    s.norm = fields[9];
    series.rows.push_back(s);
  }
  return series;
}

void write_gate_csv(std::ostream& os, const GateMatrix& gate) {
  os << kGateHeader << '\n';
  for (std::size_t r = 0; r < kDim; ++r) {
    os << kBasisLabels[r];
    for (std::size_t c = 0; c < kDim; ++c) {
      os << ',' << format_number(gate(r, c).real()) << ',' << format_number(gate(r, c).imag());
    }
    os << '\n';
  }
}

}  // namespace isingcn
