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

#include "dwm/metrics.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "dwm/errors.h"
#include "dwm/reconstruction.h"

namespace dwm {

double fidelity(const SystemState &a, const SystemState &b) {
    return std::norm(inner(a, b));
}

double phase_aligned_l2(const SystemState &a, const SystemState &b) {
    // Equal to sqrt(2 - 2 |<a|b>|), but evaluated on the aligned difference
    // so nearly identical states do not lose precision to cancellation.
    const Complex overlap = inner(b, a);
    const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex{1.0, 0.0};
    double total = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        total += std::norm(a[i] - phase * b[i]);
    }
    return std::sqrt(total);
}

namespace {

struct TrialOutcome {
    bool ok = false;
    double fidelity = 0.0;
    std::vector<Complex> error;  // phase-aligned estimate minus truth
};

TrialOutcome evaluate(const SystemState &truth, const SystemState &estimate) {
    TrialOutcome out;
    out.ok = true;
    const Complex overlap = inner(estimate, truth);
    out.fidelity = std::norm(overlap);
    const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex{1.0, 0.0};
    out.error.resize(truth.dim());
    for (std::size_t x = 0; x < truth.dim(); ++x) {
        out.error[x] = estimate[x] * phase - truth[x];
    }
    return out;
}

}  // namespace

TrialStatistics run_trials(const SystemState &psi, const CouplingStrength &strength, const TrialOptions &options) {
    if (options.trials < 2) {
        throw Error(ErrorCode::InvalidArgument, "run_trials needs at least 2 trials");
    }
    strength.require_reconstructible();

    TrialStatistics stats;
    stats.theta = strength.theta();
    stats.trials = options.trials;

    std::vector<TrialOutcome> outcomes(options.trials);
    if (!options.shots) {
        const TrialOutcome single = evaluate(psi, reconstruct_exact(psi, strength).estimate);
        std::fill(outcomes.begin(), outcomes.end(), single);
    } else {
        const auto allocation = options.shots->allocate(psi.dim());
        stats.shots_total = std::accumulate(allocation.begin(), allocation.end(), std::uint64_t{0});

        unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
        threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(options.trials));

        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            for (std::size_t t = next++; t < options.trials; t = next++) {
                try {
                    const auto result = reconstruct_sampled(psi, strength, *options.shots, derive_seed(options.seed, t));
                    outcomes[t] = evaluate(psi, result.estimate);
                } catch (const Error &e) {
                    if (e.code() != ErrorCode::VanishingTildePsi) {
                        std::lock_guard lock(failure_mutex);
                        failure = std::current_exception();
                    }
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    failure = std::current_exception();
                }
            }
        };
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned i = 0; i < threads; ++i) {
            pool.emplace_back(worker);
        }
        pool.clear();
        if (failure) {
            std::rethrow_exception(failure);
        }
    }

    const std::size_t d = psi.dim();
    std::size_t n = 0;
    double fidelity_sum = 0.0;
    double sq_sum = 0.0;
    std::vector<Complex> mean_error(d);
    std::vector<double> sq_errors;
    sq_errors.reserve(outcomes.size());
    for (const auto &o : outcomes) {
        if (!o.ok) {
            ++stats.failed_trials;
            continue;
        }
        ++n;
        fidelity_sum += o.fidelity;
        const double sq = squared_norm(o.error);
        sq_errors.push_back(sq);
        sq_sum += sq;
        for (std::size_t x = 0; x < d; ++x) {
            mean_error[x] += o.error[x];
        }
    }
    if (n == 0) {
        throw Error(ErrorCode::VanishingTildePsi, "every trial failed the vanishing amplitude-sum check");
    }
    const double count = static_cast<double>(n);
    for (auto &m : mean_error) {
        m /= count;
    }
    double spread = 0.0;
    for (const auto &o : outcomes) {
        if (!o.ok) {
            continue;
        }
        for (std::size_t x = 0; x < d; ++x) {
            spread += std::norm(o.error[x] - mean_error[x]);
        }
    }

    const double mean_sq = sq_sum / count;
    stats.mean_fidelity = fidelity_sum / count;
    stats.rmse_l2 = std::sqrt(mean_sq);
    stats.bias_l2 = std::sqrt(squared_norm(mean_error));
    stats.std_l2 = std::sqrt(spread / count);

    if (n > 1 && stats.rmse_l2 > 0.0) {
        double var = 0.0;
        for (double sq : sq_errors) {
            var += (sq - mean_sq) * (sq - mean_sq);
        }
        var /= count - 1.0;
        stats.rmse_stderr = std::sqrt(var / count) / (2.0 * stats.rmse_l2);
    }
    return stats;
}

std::vector<TrialStatistics> theta_sweep(const SystemState &psi, std::span<const double> thetas,
                                         const TrialOptions &options) {
    std::vector<TrialStatistics> out;
    out.reserve(thetas.size());
    for (double theta : thetas) {
        out.push_back(run_trials(psi, CouplingStrength(theta), options));
    }
    return out;
}

}  // namespace dwm
