// Copyright 2026 The dwm Authors
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

#include <numbers>

#include "dwm/metrics.h"
#include "dwm/protocol.h"
#include "dwm/reconstruction.h"
#include "dwm/sampler.h"

namespace {

dwm::SystemState bench_state(std::size_t d) {
    std::vector<dwm::Complex> amplitudes(d);
    for (std::size_t x = 0; x < d; ++x) {
        amplitudes[x] = {1.0 + 0.01 * double(x), 0.02 * double(d - x)};
    }
    return dwm::make_system_state(amplitudes);
}

void BM_JointProbabilities(benchmark::State &state) {
    const auto psi = bench_state(static_cast<std::size_t>(state.range(0)));
    const dwm::CouplingStrength strength(0.8);
    for (auto _ : state) {
        auto joint = dwm::apply_coupling(psi, psi.dim() / 2, strength);
        benchmark::DoNotOptimize(dwm::joint_probabilities(joint));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_JointProbabilities)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

void BM_ReconstructExact(benchmark::State &state) {
    const auto psi = bench_state(static_cast<std::size_t>(state.range(0)));
    const dwm::CouplingStrength strength(std::numbers::pi / 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dwm::reconstruct_exact(psi, strength));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ReconstructExact)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

void BM_OutcomeDistribution(benchmark::State &state) {
    const auto psi = bench_state(static_cast<std::size_t>(state.range(0)));
    const auto joint = dwm::apply_coupling(psi, 0, dwm::CouplingStrength(1.0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dwm::outcome_distribution(joint, dwm::MeasurementBasis::Y));
    }
}
BENCHMARK(BM_OutcomeDistribution)->RangeMultiplier(4)->Range(4, 256);

void BM_SampleCounts(benchmark::State &state) {
    const auto psi = bench_state(8);
    const auto dist = dwm::outcome_distribution(dwm::apply_coupling(psi, 3, dwm::CouplingStrength(1.0)),
                                                dwm::MeasurementBasis::X);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dwm::sample_counts(dist, static_cast<std::uint64_t>(state.range(0)), seed++));
    }
}
BENCHMARK(BM_SampleCounts)->RangeMultiplier(100)->Range(100, 10000000);

void BM_RunTrials(benchmark::State &state) {
    const auto psi = bench_state(4);
    const dwm::CouplingStrength strength(std::numbers::pi / 2);
    const dwm::TrialOptions options{.shots = dwm::ShotPlan::total_budget(300000), .trials = 100, .seed = 1,
                                    .threads = static_cast<unsigned>(state.range(0))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(dwm::run_trials(psi, strength, options));
    }
}
BENCHMARK(BM_RunTrials)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
