// Copyright 2026 The ksb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cmath>

#include "ksb/density.hpp"
#include "ksb/exact.hpp"
#include "ksb/montecarlo.hpp"
#include "ksb/reflection.hpp"

namespace {

void BM_LogF(benchmark::State& state) {
    double x = -3.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ksb::log_f(10000, x));
        x = x >= 3.0 ? -3.0 : x + 1e-3;
    }
}
BENCHMARK(BM_LogF);

void BM_SolveB(benchmark::State& state) {
    const auto n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ksb::solve_b(n, std::sqrt(double(n))));
    }
}
BENCHMARK(BM_SolveB)->Arg(100)->Arg(10000)->Arg(1000000);

void BM_QPyke(benchmark::State& state) {
    const auto n = state.range(0);
    const ksb::Boundary boundary{n, 20.5, static_cast<double>(n) + 10.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(ksb::q_pyke(boundary));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_QPyke)->Arg(10000)->Arg(100000)->Arg(1000000)
    ->Unit(benchmark::kMillisecond)->Complexity(benchmark::oN);

void BM_EstimateQ(benchmark::State& state) {
    const auto workers = static_cast<unsigned>(state.range(0));
    const ksb::Boundary boundary{100, 5.0, 100.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(ksb::estimate_q(boundary, 100000, 1939,
                                                 ksb::Sampler::spacings,
                                                 workers));
    }
    state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_EstimateQ)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)
    ->MeasureProcessCPUTime()->UseRealTime();

void BM_SortVsSpacings(benchmark::State& state) {
    const auto sampler = state.range(0) == 0 ? ksb::Sampler::sort
                                             : ksb::Sampler::spacings;
    ksb::CounterRng rng(1, 0);
    std::vector<double> sample;
    for (auto _ : state) {
        ksb::sample_order_stats(1000, rng, sampler, sample);
        benchmark::DoNotOptimize(sample.data());
    }
    state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_SortVsSpacings)->Arg(0)->Arg(1);

void BM_ReflectionTable(benchmark::State& state) {
    const auto n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ksb::build_table(n, 2.0, 64));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_ReflectionTable)->Arg(20)->Arg(40)->Arg(80)->Arg(160)
    ->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNSquared);

}  // namespace

BENCHMARK_MAIN();
