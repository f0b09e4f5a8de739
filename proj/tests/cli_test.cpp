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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "isingcn/csv.hpp"
#include "isingcn/gate_lab.hpp"

namespace isingcn::tools {
namespace {

constexpr double kPi = 3.14159265358979323846;

struct Captured {
  std::ostringstream out;
  std::ostringstream log;
  Io io() { return {out, log}; }
};

RunConfig preset(const std::string& name, Overrides o = {}) { return load_run_config({}, name, o); }

// "# key = value" lines of a report.
std::map<std::string, std::string> comments(const std::string& text) {
  std::map<std::string, std::string> m;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) {
    if (!line.starts_with("# ")) continue;
    const auto eq = line.find(" = ");
    if (eq == std::string::npos) continue;
    m[line.substr(2, eq - 2)] = line.substr(eq + 3);
  }
  return m;
}

TimeSeries parse_series(const std::string& csv, Frame frame) {
  std::istringstream is(csv);
  return read_timeseries_csv(is, frame);
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "isingcn_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

TEST(Simulate, DigitalElevenFlipsToTenInPrimedFrame) {
  Overrides o;
  o.initial = "digital:11";
  Captured cap;
  ASSERT_EQ(cmd_simulate(preset("params12", o), cap.io()), kExitOk);
  const TimeSeries ts = parse_series(cap.out.str(), Frame::kPrimed);
  EXPECT_EQ(ts.rows.size(), 1001u);
  EXPECT_NO_THROW(ts.validate());
  const QState& end = ts.rows.back().state;
  EXPECT_NEAR(end[2].imag(), 1.0, 1e-2);
  EXPECT_NEAR(end[2].real(), 0.0, 1e-2);
  EXPECT_NEAR(end[3].real(), 0.0, 1e-2);
  EXPECT_NEAR(std::abs(end[3]), 0.0, 1e-2);
  EXPECT_NE(cap.log.str().find("1001 rows"), std::string::npos);
}

TEST(Simulate, SuperpositionSwapsLowerBlock) {
  Overrides o;
  o.initial = "superposition";
  Captured cap;
  ASSERT_EQ(cmd_simulate(preset("params12", o), cap.io()), kExitOk);
  const QState& end = parse_series(cap.out.str(), Frame::kPrimed).rows.back().state;
  EXPECT_NEAR(std::abs(end[3] - Complex(0.0, 1.0 / std::sqrt(3.0))), 0.0, 1e-2);
  EXPECT_NEAR(std::abs(end[2] - Complex(0.0, 1.0 / std::sqrt(6.0))), 0.0, 1e-2);
  EXPECT_NEAR(std::abs(end[0]), std::sqrt(0.3), 1e-2);
  EXPECT_NEAR(std::abs(end[1]), std::sqrt(0.2), 1e-2);
}

TEST(Simulate, ZeroDurationGivesTwoIdenticalRows) {
  Overrides o;
  o.initial = "digital:01";
  o.duration = "0";
  Captured cap;
  ASSERT_EQ(cmd_simulate(preset("params12", o), cap.io()), kExitOk);
  const TimeSeries ts = parse_series(cap.out.str(), Frame::kRaw);
  ASSERT_EQ(ts.rows.size(), 2u);
  EXPECT_EQ(ts.rows[0].t, 0.0);
  EXPECT_EQ(ts.rows[1].t, 0.0);
  EXPECT_EQ(ts.rows[0].state, ts.rows[1].state);
  EXPECT_EQ(ts.rows[0].state, digital_state("01"));
}

TEST(Simulate, RequiresInitialState) {
  Captured cap;
  EXPECT_THROW(cmd_simulate(preset("params12"), cap.io()), InvalidInput);
}

TEST(Simulate, WritesConfiguredFile) {
  const auto path = scratch("sim.csv");
  std::filesystem::remove(path);
  Overrides o;
  o.initial = "digital:10";
  o.out = path.string();
  o.sample_dt = 1.0;
  Captured cap;
  ASSERT_EQ(cmd_simulate(preset("params12", o), cap.io()), kExitOk);
  EXPECT_TRUE(cap.out.str().empty());
  std::ifstream in(path);
  const TimeSeries ts = read_timeseries_csv(in, Frame::kPrimed);
  EXPECT_EQ(ts.rows.size(), 33u);
}

TEST(Simulate, UnwritableOutputIsAnError) {
  Overrides o;
  o.initial = "digital:10";
  o.out = (scratch("missing_dir") / "x" / "sim.csv").string();
  Captured cap;
  EXPECT_THROW(cmd_simulate(preset("params12", o), cap.io()), InvalidInput);
}

TEST(Tomography, ReferenceTableIsHalfPiGcn) {
  Captured cap;
  ASSERT_EQ(cmd_tomography(preset("params12"), cap.io()), kExitOk);
  const auto m = comments(cap.out.str());
  EXPECT_EQ(m.at("frame"), "primed");
  EXPECT_EQ(m.at("gcn"), "ok");
  EXPECT_NEAR(std::stod(m.at("dphi00")), 0.0, 1e-15);
  EXPECT_NEAR(std::stod(m.at("dphi01")), 0.0, 0.02);
  EXPECT_NEAR(std::stod(m.at("dphi10")), kPi / 2, 0.02);
  EXPECT_NEAR(std::stod(m.at("dphi11")), kPi / 2, 0.02);
  EXPECT_NE(cap.out.str().find(std::string(kGateHeader)), std::string::npos);
}

TEST(Tomography, RawFidelitiesAreReported) {
  Overrides o;
  o.frame = "raw";
  Captured cap;
  cmd_tomography(preset("params24", o), cap.io());
  const auto m = comments(cap.out.str());
  EXPECT_NEAR(std::stod(m.at("fidelity_icn")), 0.83329925590712906, 1e-9);
  EXPECT_NEAR(std::stod(m.at("fidelity_cn")), std::stod(m.at("fidelity_icn")), 1e-15);
}

TEST(Tomography, IdentityIsFlaggedAsNotGcn) {
  Overrides o;
  o.duration = "0";
  Captured cap;
  EXPECT_EQ(cmd_tomography(preset("params12", o), cap.io()), kExitGcnViolation);
  const auto m = comments(cap.out.str());
  EXPECT_EQ(m.at("gcn"), "violated");
  EXPECT_EQ(m.at("leak_entry"), "10,10");
  EXPECT_NEAR(std::stod(m.at("leak_modulus")), 1.0, 1e-15);
  EXPECT_NE(cap.log.str().find("not a generalized CN"), std::string::npos);
}

TEST(Calibrate, PiDurationReport) {
  CalibrateOptions opt;
  opt.pi_duration = true;
  Captured cap;
  ASSERT_EQ(cmd_calibrate(preset("params12"), opt, cap.io()), kExitOk);
  const std::string text = cap.out.str();
  const auto m = comments(text);
  EXPECT_NEAR(std::stod(m.at("pi_duration")), 31.415934080852294, 1e-9);
  EXPECT_GT(std::stod(m.at("pi_relative_shift")), 0.0);
  EXPECT_GE(std::stod(m.at("pi_transfer")), 0.999);
  const RunConfig back = parse_config(text);
  EXPECT_FALSE(back.duration_auto);
  EXPECT_EQ(back.pulse.duration, std::stod(m.at("pi_duration")));
}

TEST(Calibrate, PureCnFullSearchConvergesAndReloads) {
  CalibrateOptions opt;
  opt.pure_cn = true;
  opt.search.free = parse_free_parameters("omega1,a2,duration");
  opt.search.tie_a1 = true;
  const auto path = scratch("tuned.cfg");
  Overrides o;
  o.out = path.string();
  Captured cap;
  ASSERT_EQ(cmd_calibrate(preset("params12", o), opt, cap.io()), kExitOk);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  const auto m = comments(ss.str());
  EXPECT_EQ(m.at("converged"), "true");
  EXPECT_LE(std::stod(m.at("objective")), 1e-6);

  const RunConfig tuned = load_run_config(path.string(), std::nullopt, {});
  EXPECT_FALSE(tuned.out.has_value());
  EXPECT_GT(tuned.system.omega1, 500.0);
  EXPECT_GT(tuned.pulse.a2, 0.1);
  EXPECT_NEAR(gate_infidelity(tuned.system, tuned.pulse, icn_matrix()), std::stod(m.at("objective")), 1e-15);
}

TEST(Calibrate, AmplitudeOnlyReportsNotConverged) {
  CalibrateOptions opt;
  opt.pure_cn = true;
  opt.search.free = {FreeParameter::kA2};
  Captured cap;
  EXPECT_EQ(cmd_calibrate(preset("params12"), opt, cap.io()), kExitNotConverged);
  const auto m = comments(cap.out.str());
  EXPECT_EQ(m.at("converged"), "false");
  EXPECT_GT(std::stod(m.at("objective")), 1e-3);
  EXPECT_NE(cap.log.str().find("NOT converged"), std::string::npos);
}

TEST(Calibrate, NeedsAMode) {
  Captured cap;
  EXPECT_THROW(cmd_calibrate(preset("params12"), {}, cap.io()), InvalidInput);
}

TEST(Sweep, RowsInGridOrderRegardlessOfThreads) {
  SweepOptions opt;
  opt.param = "a2";
  opt.from = 0.09;
  opt.to = 0.11;
  opt.steps = 9;
  opt.threads = 1;
  Captured serial;
  ASSERT_EQ(cmd_sweep(preset("params12"), opt, serial.io()), kExitOk);
  opt.threads = 4;
  Captured parallel;
  ASSERT_EQ(cmd_sweep(preset("params12"), opt, parallel.io()), kExitOk);
  EXPECT_EQ(serial.out.str(), parallel.out.str());

  std::istringstream is(serial.out.str());
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, kSweepHeader);
  int idx = 0;
  while (std::getline(is, line)) {
    EXPECT_TRUE(line.starts_with(std::to_string(idx) + ",")) << line;
    const double value = std::stod(line.substr(line.find(',') + 1));
    EXPECT_NEAR(value, 0.09 + 0.0025 * idx, 1e-15);
    ++idx;
  }
  EXPECT_EQ(idx, 9);
}

TEST(Sweep, FailedPointsAreCommentedAndReported) {
  SweepOptions opt;
  opt.param = "a2";
  opt.from = 0.0;
  opt.to = 0.1;
  opt.steps = 3;
  Captured cap;
  EXPECT_EQ(cmd_sweep(preset("params12"), opt, cap.io()), kExitError);
  EXPECT_NE(cap.out.str().find("# 0: "), std::string::npos);
  EXPECT_NE(cap.log.str().find("(1 failed)"), std::string::npos);
}

TEST(Sweep, RejectsBadOptions) {
  SweepOptions opt;
  opt.param = "carrier";
  Captured cap;
  EXPECT_THROW(cmd_sweep(preset("params12"), opt, cap.io()), InvalidInput);
  opt.param = "a2";
  opt.steps = 0;
  EXPECT_THROW(cmd_sweep(preset("params12"), opt, cap.io()), InvalidInput);
}

TEST(LoadRunConfig, SourcesAndOverrides) {
  EXPECT_THROW(load_run_config({}, {}, {}), InvalidInput);
  EXPECT_THROW(load_run_config(scratch("absent.cfg").string(), {}, {}), InvalidInput);
  Overrides bad;
  bad.duration = "-1";
  EXPECT_THROW(preset("params12", bad), InvalidInput);
  bad = {};
  bad.initial = "digital:22";
  EXPECT_THROW(preset("params12", bad), InvalidInput);

  const auto path = scratch("base.cfg");
  std::ofstream(path) << "a2 = 0.2\nframe = raw\n";
  Overrides o;
  o.frame = "primed";
  const RunConfig c = load_run_config(path.string(), "params12", o);
  EXPECT_EQ(c.pulse.a2, 0.2);
  EXPECT_EQ(c.frame, Frame::kPrimed);
}

}  // namespace
}  // namespace isingcn::tools
