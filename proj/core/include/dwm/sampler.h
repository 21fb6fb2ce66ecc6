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

#ifndef DWM_SAMPLER_H
#define DWM_SAMPLER_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "dwm/protocol.h"
#include "dwm/reconstruction.h"
#include "dwm/state.h"

namespace dwm {

/// Pointer measurement basis. Outcome 0 / 1 ("first" / "second") are
/// X: plus / minus, Y: L / R, Z: zero / one.
enum class MeasurementBasis { X = 0, Y = 1, Z = 2 };

inline constexpr std::array<MeasurementBasis, 3> kAllBases = {MeasurementBasis::X, MeasurementBasis::Y,
                                                             MeasurementBasis::Z};

std::string_view basis_name(MeasurementBasis basis);
/// Pointer labels of the (first, second) outcomes of `basis`.
std::array<PointerLabel, 2> basis_outcomes(MeasurementBasis basis);

struct MeasurementSetting {
    std::size_t x = 0;
    MeasurementBasis basis = MeasurementBasis::Z;
    std::uint64_t shots = 1;

    /// Position in the scan order 3x + basis; also the seed stream index.
    std::uint64_t index() const noexcept {
        return 3 * static_cast<std::uint64_t>(x) + static_cast<std::uint64_t>(basis);
    }
};

/// Outcome counts over (momentum k, pointer outcome b), stored at 2k + b.
class CountTable {
   public:
    CountTable(std::size_t dim, std::vector<std::uint64_t> counts);

    std::size_t dim() const noexcept {
        return counts_.size() / 2;
    }
    std::uint64_t total() const noexcept {
        return total_;
    }
    std::uint64_t count(std::size_t k, std::size_t outcome) const {
        return counts_.at(2 * k + outcome);
    }
    std::span<const std::uint64_t> counts() const noexcept {
        return counts_;
    }

    bool operator==(const CountTable &) const = default;

   private:
    std::vector<std::uint64_t> counts_;
    std::uint64_t total_ = 0;
};

/// Prob(b, p_k) = |(<p_k| (x) <b|) |Psi'>|^2 over the full Fourier basis of
/// the system and the two outcomes of `basis`, laid out at 2k + b.
std::vector<double> outcome_distribution(const JointState &joint, MeasurementBasis basis);

/// Multinomial draw of `shots` outcomes from `dist` (length 2d), by
/// sequential conditional binomials. Deterministic in (dist, shots, seed).
/// Throws InvalidDistribution if an entry is < -1e-12 or |sum - 1| > 1e-9.
CountTable sample_counts(std::span<const double> dist, std::uint64_t shots, std::uint64_t seed);

/// Frequencies of the momentum-zero cells: p_plus = X(0, first) / N_X, etc.
/// Throws DimensionMismatch if the tables disagree on d.
ProbabilitySet estimate_probset(const CountTable &x_table, const CountTable &y_table, const CountTable &z_table);

/// Stream splitting: seed for stream `stream` of a run seeded with `base`.
/// splitmix64(base ^ splitmix64(stream + 0x9e3779b97f4a7c15)).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

/// How shots are spread over the 3d (x, basis) settings of one scan.
struct ShotPlan {
    enum class Mode { PerSetting, TotalBudget };

    Mode mode = Mode::TotalBudget;
    std::uint64_t shots = 0;

    static ShotPlan per_setting(std::uint64_t n) {
        return {Mode::PerSetting, n};
    }
    static ShotPlan total_budget(std::uint64_t n) {
        return {Mode::TotalBudget, n};
    }

    /// Shots for each setting in scan order. TotalBudget splits evenly and
    /// hands the remainder to the lowest indices. Throws InvalidArgument if
    /// any setting would receive zero shots.
    std::vector<std::uint64_t> allocate(std::size_t dim) const;
};

struct SampledScan {
    std::vector<ProbabilitySet> probsets;
    /// One table per setting, in scan order 3x + basis.
    std::vector<CountTable> tables;
    std::vector<std::uint64_t> shots;
};

/// Simulates every (x, basis) setting with independent seeded streams.
SampledScan sample_scan(const SystemState &psi, const CouplingStrength &strength, const ShotPlan &plan,
                        std::uint64_t seed);

/// sample_scan followed by reconstruct with the noise-aware vanishing cut.
ReconstructionResult reconstruct_sampled(const SystemState &psi, const CouplingStrength &strength,
                                         const ShotPlan &plan, std::uint64_t seed);

}  // namespace dwm

#endif
