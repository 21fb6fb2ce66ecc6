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

#include "dwm/reconstruction.h"

#include <cmath>
#include <cstdio>
#include <string>

#include "dwm/errors.h"

namespace dwm {

namespace {

std::string short_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

}  // namespace

Complex raw_amplitude(const ProbabilitySet &probs, const CouplingStrength &strength) {
    strength.require_reconstructible();
    const double tan_half = std::tan(strength.theta() / 2.0);
    return {probs.p_plus - probs.p_minus + 2.0 * probs.p_one * tan_half, probs.p_L - probs.p_R};
}

ReconstructionResult reconstruct(std::span<const ProbabilitySet> probsets, const CouplingStrength &strength,
                                 double vanishing_threshold) {
    const std::size_t d = probsets.size();
    if (d < 2) {
        throw Error(ErrorCode::DimensionTooSmall, "need at least 2 probability sets, got " + std::to_string(d));
    }
    strength.require_reconstructible();

    RawEstimate raw;
    raw.theta = strength.theta();
    raw.per_x.reserve(d);
    std::vector<double> postselection;
    postselection.reserve(d);
    for (const auto &p : probsets) {
        raw.per_x.push_back(raw_amplitude(p, strength));
        postselection.push_back(p.p_plus + p.p_minus);
    }

    const double raw_norm = std::sqrt(squared_norm(raw.per_x));
    if (!(raw_norm > vanishing_threshold)) {
        throw Error(ErrorCode::VanishingTildePsi,
                    "||raw|| = " + short_number(raw_norm) + " <= " + short_number(vanishing_threshold) +
                        "; the amplitude sum of the state is (numerically) zero");
    }

    // The common prefactor carries conj(psi_tilde); fixing sum_x estimate_x >= 0 removes its phase.
    Complex sum{0.0, 0.0};
    for (const auto &r : raw.per_x) {
        sum += r;
    }
    Complex rotation{1.0 / raw_norm, 0.0};
    if (std::abs(sum) > 0.0) {
        rotation = std::conj(sum) / (std::abs(sum) * raw_norm);
    }
    std::vector<Complex> aligned(raw.per_x.size());
    for (std::size_t x = 0; x < d; ++x) {
        aligned[x] = raw.per_x[x] * rotation;
    }

    const double tilde_psi = static_cast<double>(d) * raw_norm / (2.0 * strength.sin());
    return ReconstructionResult{
        .estimate = make_system_state(aligned),
        .raw = std::move(raw),
        .tilde_psi_magnitude = tilde_psi,
        .postselection = std::move(postselection),
        .shots_used = {},
    };
}

ReconstructionResult reconstruct_exact(const SystemState &psi, const CouplingStrength &strength) {
    strength.require_reconstructible();
    const auto probsets = exact_probability_sets(psi, strength);
    return reconstruct(probsets, strength, kExactVanishingThreshold);
}

double sampled_vanishing_threshold(std::uint64_t shots_per_setting, std::size_t dim) {
    return 3.0 * std::sqrt(6.0 / (static_cast<double>(shots_per_setting) * static_cast<double>(dim)));
}

}  // namespace dwm
