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

#include <benchmark/benchmark.h>

#include "isingcn/calibrate.hpp"
#include "isingcn/gate_lab.hpp"
#include "isingcn/propagator.hpp"
#include "isingcn/run_config.hpp"

namespace {

using namespace isingcn;

const RunConfig& params12() {
  static const RunConfig c = preset_config("params12");
  return c;
}

PulseSpec calibrated_pulse() {
  static const PulseSpec p = resolved_pulse(params12());
  return p;
}

void BM_BuildPropagator(benchmark::State& state) {
  const Generator gen = build_generator(params12().system, calibrated_pulse());
  for (auto _ : state) benchmark::DoNotOptimize(Propagator(gen));
}
BENCHMARK(BM_BuildPropagator);

void BM_EvolveExact(benchmark::State& state) {
  const PulseSpec p = calibrated_pulse();
  const Generator gen = build_generator(params12().system, p);
  const QState c0 = reference_superposition();
  for (auto _ : state) benchmark::DoNotOptimize(evolve_exact(c0, gen, p.duration));
}
BENCHMARK(BM_EvolveExact);

void BM_EvolveRk4(benchmark::State& state) {
  const PulseSpec p = calibrated_pulse();
  const Generator gen = build_generator(params12().system, p);
  const QState c0 = digital_state("11");
  const double dt = p.duration / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(evolve_rk4(c0, gen, p.duration, dt));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EvolveRk4)->Arg(10000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_Timeseries(benchmark::State& state) {
  const PulseSpec p = calibrated_pulse();
  const QState c0 = digital_state("11");
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_timeseries(params12().system, p, c0, p.duration / 1000.0, Frame::kPrimed));
  }
}
BENCHMARK(BM_Timeseries)->Unit(benchmark::kMicrosecond);

void BM_Tomography(benchmark::State& state) {
  const PulseSpec p = calibrated_pulse();
  for (auto _ : state) benchmark::DoNotOptimize(tomography(params12().system, p, Frame::kPrimed));
}
BENCHMARK(BM_Tomography);

void BM_CalibratePiDuration(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(calibrate_pi_duration(params12().system, params12().pulse));
}
BENCHMARK(BM_CalibratePiDuration)->Unit(benchmark::kMicrosecond);

void BM_TunePureCn(benchmark::State& state) {
  SearchSpec spec;
  spec.free = {FreeParameter::kOmega1, FreeParameter::kA2, FreeParameter::kDuration};
  spec.tie_a1 = true;
  const PulseSpec p = calibrated_pulse();
  for (auto _ : state) benchmark::DoNotOptimize(tune_pure_cn(params12().system, p, spec));
}
BENCHMARK(BM_TunePureCn)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
