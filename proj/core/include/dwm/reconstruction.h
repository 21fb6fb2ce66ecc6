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

#ifndef DWM_RECONSTRUCTION_H
#define DWM_RECONSTRUCTION_H

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dwm/protocol.h"
#include "dwm/state.h"

namespace dwm {

/// Threshold on ||raw|| below which psi-tilde is treated as zero when the
/// probabilities are exact.
inline constexpr double kExactVanishingThreshold = 1e-9;

/// Unnormalized per-position estimates. In the noiseless case
/// per_x[x] = (2 conj(psi_tilde) sin(theta) / d) * psi_x.
struct RawEstimate {
    std::vector<Complex> per_x;
    double theta = 0.0;

    std::size_t dim() const noexcept {
        return per_x.size();
    }
};

struct ReconstructionResult {
    /// Unit norm, rotated so that the component sum is real and >= 0.
    SystemState estimate;
    RawEstimate raw;
    /// |sum_x psi_x| recovered from ||raw|| = 2 |psi_tilde| sin(theta) / d.
    double tilde_psi_magnitude = 0.0;
    /// Post-selection probability seen at each coupled position (p_plus + p_minus).
    std::vector<double> postselection;
    /// Shots per (x, basis) setting in the order 3x + {X, Y, Z}; empty when exact.
    std::vector<std::uint64_t> shots_used;

    bool exact() const noexcept {
        return shots_used.empty();
    }
};

/// P_+ - P_- + 2 P_1 tan(theta/2) + i (P_L - P_R).
/// Throws DegenerateAngle for sin(theta) ~ 0 or theta ~ pi.
Complex raw_amplitude(const ProbabilitySet &probs, const CouplingStrength &strength);

/// Inverts one probability set per position into a normalized wavefunction.
/// Throws DimensionTooSmall, DegenerateAngle, or VanishingTildePsi when
/// ||raw|| <= vanishing_threshold.
ReconstructionResult reconstruct(std::span<const ProbabilitySet> probsets, const CouplingStrength &strength,
                                 double vanishing_threshold = kExactVanishingThreshold);

/// Runs the protocol noiselessly at every position, then reconstructs.
ReconstructionResult reconstruct_exact(const SystemState &psi, const CouplingStrength &strength);

/// 3 * sqrt(6 / (N d)): noise-aware VanishingTildePsi cut for N shots per setting.
double sampled_vanishing_threshold(std::uint64_t shots_per_setting, std::size_t dim);

}  // namespace dwm

#endif
