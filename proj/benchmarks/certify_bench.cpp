// Copyright 2026 The temporal-cert Authors
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

#include "tcert/certify.hpp"
#include "tcert/pdm.hpp"

namespace {

using namespace tcert;

void BM_InnerMax(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(certify::s3_inner_max(0.7, 1.3));
}
BENCHMARK(BM_InnerMax);

void BM_Sweep(benchmark::State& state) {
    const int gu = static_cast<int>(state.range(0));
    const int gv = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(certify::channel_sweep(gu, gv));
}
BENCHMARK(BM_Sweep)->Args({9, 9})->Args({33, 17})->Unit(benchmark::kMillisecond);

void BM_PdmTwoEvents(benchmark::State& state) {
    const auto ch = qsim::pauli_channel({0.4, 1.1});
    const auto rho = qsim::DensityMatrix::ket0();
    for (auto _ : state) benchmark::DoNotOptimize(qsim::pdm_two_events(rho, ch));
}
BENCHMARK(BM_PdmTwoEvents);

// Cost grows as 16^events.
void BM_PdmGeneral(benchmark::State& state) {
    const int events = static_cast<int>(state.range(0));
    qsim::PdmScenario sc{qsim::DensityMatrix::maximally_mixed().matrix(), {}};
    for (int k = 0; k < events; ++k) sc.events.push_back({0, k});
    for (auto _ : state) benchmark::DoNotOptimize(qsim::pdm_general(sc));
}
BENCHMARK(BM_PdmGeneral)->DenseRange(1, 4);

}  // namespace

BENCHMARK_MAIN();
