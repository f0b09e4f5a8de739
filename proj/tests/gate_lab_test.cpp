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
#include <numbers>
#include <random>

#include "isingcn/calibrate.hpp"
#include "isingcn/gate_lab.hpp"
#include "oracles.hpp"

namespace isingcn {
namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);
const SystemParams kSys12{500.0, 100.0, 5.0};
const PulseSpec kPulse12{95.0, 0.5, 0.1, 0.0};

double max_entry_diff(const GateMatrix& a, const GateMatrix& b) {
  return (a.entries - b.entries).cwiseAbs().maxCoeff();
}

GateMatrix random_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix4 m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<ComplexMatrix4> qr(m);
  return GateMatrix(qr.householderQ() * ComplexMatrix4::Identity());
}

TEST(CnMatrix, SwapsControlledPair) {
  const QState in({0.1, 0.2, 0.3, 0.4});
  EXPECT_EQ(cn_matrix().apply(in), QState({0.1, 0.2, 0.4, 0.3}));
  EXPECT_TRUE((cn_matrix() * cn_matrix()).entries.isIdentity(0.0));
  EXPECT_LT(cn_matrix().unitarity_error(), 1e-15);
}

TEST(GcnMatrix, ReducesToCnAndPlacesPhasesCrossed) {
  EXPECT_EQ(gcn_matrix({}).entries, cn_matrix().entries);

  const GateMatrix half_pi = gcn_matrix({0.0, 0.0, kPi / 2, kPi / 2});
  ComplexMatrix4 expected = ComplexMatrix4::Zero();
  expected(0, 0) = 1.0;
  expected(1, 1) = 1.0;
  expected(2, 3) = kI;
  expected(3, 2) = kI;
  EXPECT_LT((half_pi.entries - expected).cwiseAbs().maxCoeff(), 1e-15);

  // dphi11 belongs to |10><11|, dphi10 to |11><10|.
  const GateMatrix g = gcn_matrix({0.0, 0.0, 0.3, 0.7});
  EXPECT_LT(std::abs(g(2, 3) - std::polar(1.0, 0.7)), 1e-15);
  EXPECT_LT(std::abs(g(3, 2) - std::polar(1.0, 0.3)), 1e-15);
}

TEST(GcnMatrix, AlwaysUnitary) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (int i = 0; i < 100; ++i) {
    EXPECT_LT(gcn_matrix({u(rng), u(rng), u(rng), u(rng)}).unitarity_error(), 1e-14);
  }
}

TEST(ExtractPhases, KnownGates) {
  const GcnPhases cn = extract_gcn_phases(cn_matrix());
  EXPECT_EQ(cn.dphi00, 0.0);
  EXPECT_NEAR(cn.dphi01, 0.0, 1e-15);
  EXPECT_NEAR(cn.dphi10, 0.0, 1e-15);
  EXPECT_NEAR(cn.dphi11, 0.0, 1e-15);

  const GcnPhases half_pi = extract_gcn_phases(gcn_matrix({0.0, 0.0, kPi / 2, kPi / 2}));
  EXPECT_EQ(half_pi.dphi00, 0.0);
  EXPECT_NEAR(half_pi.dphi01, 0.0, 1e-15);
  EXPECT_NEAR(half_pi.dphi10, kPi / 2, 1e-15);
  EXPECT_NEAR(half_pi.dphi11, kPi / 2, 1e-15);

  const GcnPhases icn = extract_gcn_phases(icn_matrix());
  EXPECT_EQ(icn.dphi00, 0.0);
  EXPECT_NEAR(icn.dphi01, 0.0, 1e-15);
  EXPECT_NEAR(icn.dphi10, 0.0, 1e-15);
  EXPECT_NEAR(icn.dphi11, 0.0, 1e-15);
}

TEST(ExtractPhases, RoundTripUpToGlobalPhase) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (int i = 0; i < 200; ++i) {
    const GcnPhases in{u(rng), u(rng), u(rng), u(rng)};
    const GateMatrix g = gcn_matrix(in);
    const GcnPhases out = extract_gcn_phases(g);
    EXPECT_EQ(out.dphi00, 0.0);
    for (double p : {out.dphi01, out.dphi10, out.dphi11}) {
      EXPECT_GT(p, -kPi);
      EXPECT_LE(p, kPi);
    }
    const GateMatrix back = std::polar(1.0, in.dphi00) * gcn_matrix(out);
    EXPECT_LT(max_entry_diff(back, g), 1e-12);
  }
}

TEST(ExtractPhases, PatternViolationReportsWorstEntry) {
  try {
    extract_gcn_phases(GateMatrix());  // identity: no conditional NOT
    FAIL();
  } catch (const GcnPatternError& e) {
    EXPECT_TRUE(e.off_pattern());
    EXPECT_DOUBLE_EQ(e.modulus(), 1.0);
    EXPECT_EQ(e.row(), 2u);
    EXPECT_EQ(e.col(), 2u);
    EXPECT_NE(std::string(e.what()).find("(10,10)"), std::string::npos) << e.what();
  }

  // Small leak inside tolerance passes, above it fails.
  const double eps = 0.005;
  ComplexMatrix4 m = cn_matrix().entries;
  m(0, 0) = std::sqrt(1 - eps * eps);
  m(1, 0) = eps;
  m(0, 1) = -eps;
  m(1, 1) = std::sqrt(1 - eps * eps);
  EXPECT_NO_THROW(extract_gcn_phases(GateMatrix(m)));
  try {
    extract_gcn_phases(GateMatrix(m), 1e-3);
    FAIL();
  } catch (const GcnPatternError& e) {
    EXPECT_NEAR(e.modulus(), eps, 1e-15);
    EXPECT_EQ(e.row(), 0u);
    EXPECT_EQ(e.col(), 1u);
  }
}

TEST(ExtractPhases, RejectsNonUnitary) {
  EXPECT_THROW(extract_gcn_phases(2.0 * cn_matrix()), InvalidInput);
}

TEST(Fidelity, KnownValues) {
  EXPECT_DOUBLE_EQ(gate_fidelity(cn_matrix(), cn_matrix()), 1.0);
  EXPECT_NEAR(gate_fidelity(icn_matrix(), cn_matrix()), 1.0, 1e-15);
  // tr(CN^dagger GCN(0,0,pi/2,pi/2)) = 1 + 1 + i + i.
  EXPECT_NEAR(gate_fidelity(gcn_matrix({0, 0, kPi / 2, kPi / 2}), cn_matrix()),
              std::abs(Complex(2.0, 2.0)) / 4.0, 1e-15);
  EXPECT_NEAR(gate_fidelity(gcn_matrix({0, 0, kPi / 2, kPi / 2}), cn_matrix()), 1.0 / std::sqrt(2.0), 1e-12);
}

TEST(Fidelity, SymmetricAndPhaseInvariant) {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (int i = 0; i < 100; ++i) {
    const GateMatrix a = random_unitary(rng);
    const GateMatrix b = random_unitary(rng);
    const double f = gate_fidelity(a, b);
    EXPECT_GE(f, 0.0);
    EXPECT_LE(f, 1.0);
    EXPECT_NEAR(f, gate_fidelity(b, a), 1e-14);
    EXPECT_NEAR(f, gate_fidelity(std::polar(1.0, u(rng)) * a, b), 1e-14);
    EXPECT_NEAR(f, gate_fidelity(a, std::polar(1.0, u(rng)) * b), 1e-14);
    EXPECT_NEAR(gate_fidelity(std::polar(1.0, u(rng)) * a, a), 1.0, 1e-14);
  }
}

TEST(Tomography, ZeroDurationIsIdentity) {
  for (Frame f : {Frame::kRaw, Frame::kPrimed}) {
    EXPECT_TRUE(tomography(kSys12, kPulse12, f).entries.isIdentity(1e-15));
  }
}

TEST(Tomography, ResonantPulseRealizesGcnInPrimedFrame) {
  PulseSpec p = kPulse12;
  p.duration = calibrate_pi_duration(kSys12, p);
  const GateMatrix g = tomography(kSys12, p, Frame::kPrimed);
  // Off-resonant phase pickup on |00>, |01> leaves 0.0126 entrywise.
  EXPECT_LT(max_entry_diff(g, gcn_matrix({0, 0, kPi / 2, kPi / 2})), 0.02);

  // Regression against 40-digit reference values of the same quantity.
  const GcnPhases ph = extract_gcn_phases(g);
  EXPECT_NEAR(ph.dphi01, -0.015587072070743152, 1e-9);
  EXPECT_NEAR(ph.dphi10, 1.5533050404163732, 1e-9);
  EXPECT_NEAR(ph.dphi11, 1.5533050404163732, 1e-9);
}

TEST(Tomography, DecoupledPiPulseIsExactISwap) {
  PulseSpec p = kPulse12;
  p.a1 = 0.0;
  p.duration = kPi / p.a2;
  const GateMatrix g = tomography(kSys12, p, Frame::kPrimed);
  EXPECT_LT(std::abs(g(2, 3) - kI), 1e-12);
  EXPECT_LT(std::abs(g(3, 2) - kI), 1e-12);
  EXPECT_LT(std::abs(g(2, 2)), 1e-12);
  EXPECT_LT(std::abs(g(3, 3)), 1e-12);
  for (int r : {0, 1})
    for (int c : {2, 3}) {
      EXPECT_EQ(std::abs(g.entries(r, c)), 0.0);
      EXPECT_EQ(std::abs(g.entries(c, r)), 0.0);
    }
  const Eigen::Matrix2cd lower = g.entries.topLeftCorner<2, 2>();
  EXPECT_LT((lower.adjoint() * lower - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Tomography, UnitaryAndFrameConsistent) {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const SystemParams sys{450 + 100 * u(rng), 90 + 20 * u(rng), 2 + 6 * u(rng)};
    const PulseSpec p{sys.resonant_carrier(), u(rng), 0.05 + 0.1 * u(rng), 40 * u(rng)};
    const GateMatrix raw = tomography(sys, p, Frame::kRaw);
    const GateMatrix primed = tomography(sys, p, Frame::kPrimed);
    EXPECT_LT(raw.unitarity_error(), 1e-8);
    EXPECT_LT(primed.unitarity_error(), 1e-8);
    const ComplexMatrix4 expected = primed_phase_factors(p.duration, sys).asDiagonal() * raw.entries;
    EXPECT_LT((primed.entries - expected).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Tomography, ColumnsAreEvolvedDigitalStates) {
  PulseSpec p = kPulse12;
  p.duration = 17.25;
  const GateMatrix g = tomography(kSys12, p, Frame::kRaw);
  const auto u = oracle::taylor_propagator(500, 100, 5, 0.5, 0.1, 17.25);
  for (std::size_t j = 0; j < kDim; ++j) {
    const QState col = oracle::apply(u, digital_state(j));
    for (std::size_t r = 0; r < kDim; ++r) EXPECT_LT(std::abs(g(r, j) - col[r]), 1e-10);
  }
}

}  // namespace
}  // namespace isingcn
