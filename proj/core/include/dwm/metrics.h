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

#ifndef DWM_METRICS_H
#define DWM_METRICS_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dwm/protocol.h"
#include "dwm/sampler.h"
#include "dwm/state.h"

namespace dwm {

/// |<a|b>|^2. Throws DimensionMismatch.
double fidelity(const SystemState &a, const SystemState &b);

/// min over alpha of ||a - e^{i alpha} b|| = sqrt(2 - 2 |<a|b>|). Throws DimensionMismatch.
double phase_aligned_l2(const SystemState &a, const SystemState &b);

/// Monte Carlo summary for one coupling angle. Errors are measured after
/// aligning each estimate's global phase to the true state, so
/// rmse_l2^2 = bias_l2^2 + std_l2^2 (population variance over trials).
struct TrialStatistics {
    double theta = 0.0;
    /// Total shots per trial across all settings; nullopt in exact mode.
    std::optional<std::uint64_t> shots_total;
    std::size_t trials = 0;
    /// Trials that hit VanishingTildePsi; excluded from every statistic.
    std::size_t failed_trials = 0;
    double mean_fidelity = 0.0;
    double rmse_l2 = 0.0;
    double bias_l2 = 0.0;
    double std_l2 = 0.0;
    /// Delta-method standard error of rmse_l2.
    double rmse_stderr = 0.0;

    bool operator==(const TrialStatistics &) const = default;
};

struct TrialOptions {
    /// nullopt runs the noiseless protocol.
    std::optional<ShotPlan> shots;
    std::size_t trials = 2;
    std::uint64_t seed = 0;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// Aggregates `trials` independent reconstructions of psi. Trial t uses
/// derive_seed(seed, t); the reduction runs in trial order, so the result
/// does not depend on the thread count. Throws InvalidArgument if
/// trials < 2 and VanishingTildePsi if every trial fails.
TrialStatistics run_trials(const SystemState &psi, const CouplingStrength &strength, const TrialOptions &options);

/// One run_trials per angle with the same budget and seed.
std::vector<TrialStatistics> theta_sweep(const SystemState &psi, std::span<const double> thetas,
                                         const TrialOptions &options);

}  // namespace dwm

#endif
