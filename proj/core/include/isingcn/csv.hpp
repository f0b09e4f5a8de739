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

#ifndef ISINGCN_CSV_HPP_
#define ISINGCN_CSV_HPP_

#include <iosfwd>
#include <string>
#include <string_view>

#include "isingcn/gate_lab.hpp"
#include "isingcn/spin_core.hpp"

namespace isingcn {

inline constexpr std::string_view kTimeSeriesHeader =
    "t,re_c00,im_c00,re_c01,im_c01,re_c10,im_c10,re_c11,im_c11,norm";

inline constexpr std::string_view kGateHeader =
    "row,re_00,im_00,re_01,im_01,re_10,im_10,re_11,im_11";

/// Scientific notation with 17 significant digits (round-trips a double).
std::string format_number(double x);

void write_timeseries_csv(std::ostream& os, const TimeSeries& series);

/// Reads what write_timeseries_csv wrote. The frame is not stored in the
/// file and must be supplied. Throws InvalidInput on malformed input.
TimeSeries read_timeseries_csv(std::istream& is, Frame frame);

/// One row per gate row; columns are the (re, im) parts of each entry with
/// the column label as suffix.
void write_gate_csv(std::ostream& os, const GateMatrix& gate);

}  // namespace isingcn

#endif  // ISINGCN_CSV_HPP_
