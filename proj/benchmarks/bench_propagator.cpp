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

#include "gaussamp/oracle.hpp"
#include "gaussamp/propagator.hpp"

using namespace gaussamp;

namespace {

const ChannelParams kParams =
    ChannelParams::from_rates(0.2, 0.4, 0.1, 1.3, 0.7, 0.25);

void BM_ComputeMn(benchmark::State& state) {
  double t = 0.0;
  for (auto _ : state) {
    t += 1e-9;  // defeat caching of identical inputs
    benchmark::DoNotOptimize(compute_mn(kParams, 2.0 + t));
  }
}
BENCHMARK(BM_ComputeMn);

void BM_ComputeMnExp(benchmark::State& state) {
  double t = 0.0;
  for (auto _ : state) {
    t += 1e-9;
    benchmark::DoNotOptimize(compute_mn_exp(kParams, 2.0 + t));
  }
}
BENCHMARK(BM_ComputeMnExp);

void BM_IntegrateMnOde(benchmark::State& state) {
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_mn_ode(kParams, 2.0, steps));
  }
  state.SetComplexityN(steps);
}
BENCHMARK(BM_IntegrateMnOde)->Arg(1000)->Arg(5000);

void BM_ResidueGeneral(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(residue_general(kParams));
  }
}
BENCHMARK(BM_ResidueGeneral);

void BM_Evolve(benchmark::State& state) {
  const GaussianState vac = GaussianState::vacuum();
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve(vac, kParams, 2.0));
  }
}
BENCHMARK(BM_Evolve);

}  // namespace

BENCHMARK_MAIN();
