// Copyright 2026 The Gaussamp Authors
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

#include "gaussamp/propagator.hpp"
#include "gaussamp/separability.hpp"
#include "gaussamp/sweep.hpp"

using namespace gaussamp;

namespace {

void BM_PptGeneral(benchmark::State& state) {
  const ComplexCM cm = stationary_cm(
      ChannelParams::from_normalized(0, 0.6, 0, 0.3, 0.1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ppt_general(cm));
  }
}
BENCHMARK(BM_PptGeneral);

void BM_QuarticCriterion(benchmark::State& state) {
  const ChannelParams p = ChannelParams::from_normalized(0.3, 0.4, 0, 0.2, 0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(symmetric_quartic_criterion(p));
  }
}
BENCHMARK(BM_QuarticCriterion);

void BM_SymplecticEigenvalues(benchmark::State& state) {
  const Eigen::Matrix4d v = complex_to_real_cm(
      stationary_cm(ChannelParams::from_normalized(0, 0.6, 0, 0.3, 0.1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(symplectic_eigenvalues(v));
  }
}
BENCHMARK(BM_SymplecticEigenvalues);

void BM_CriticalNoise(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(critical_noise(0.4, 0.7, 0.0));
  }
}
BENCHMARK(BM_CriticalNoise);

void BM_SweepFigureGrid(benchmark::State& state) {
  SweepSpec spec;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep_grid(spec, 1));
  }
}
BENCHMARK(BM_SweepFigureGrid)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
