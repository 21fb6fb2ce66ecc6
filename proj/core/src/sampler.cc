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

#include "dwm/sampler.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "dwm/errors.h"

namespace dwm {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

std::string_view basis_name(MeasurementBasis basis) {
    switch (basis) {
        case MeasurementBasis::X:
            return "X";
        case MeasurementBasis::Y:
            return "Y";
        case MeasurementBasis::Z:
            return "Z";
    }
    return "?";
}

std::array<PointerLabel, 2> basis_outcomes(MeasurementBasis basis) {
    switch (basis) {
        case MeasurementBasis::X:
            return {PointerLabel::Plus, PointerLabel::Minus};
        case MeasurementBasis::Y:
            return {PointerLabel::L, PointerLabel::R};
        case MeasurementBasis::Z:
            return {PointerLabel::Zero, PointerLabel::One};
    }
    throw Error(ErrorCode::UnknownLabel, "unknown measurement basis");
}

CountTable::CountTable(std::size_t dim, std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {
    if (counts_.size() != 2 * dim) {
        throw Error(ErrorCode::DimensionMismatch, "count table needs 2d cells");
    }
    for (auto c : counts_) {
        total_ += c;
    }
}

std::vector<double> outcome_distribution(const JointState &joint, MeasurementBasis basis) {
    const std::size_t d = joint.dim();
    const auto outcomes = basis_outcomes(basis);

    // conj(F_k[x]) = exp(-2 pi i (k x mod d) / d) / sqrt(d).
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<Complex> twiddle(d);
    for (std::size_t m = 0; m < d; ++m) {
        double angle = -2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(d);
        twiddle[m] = std::polar(scale, angle);
    }

    std::vector<double> dist(2 * d);
    std::vector<Complex> projected(d);
    for (std::size_t b = 0; b < 2; ++b) {
        const PointerState bra = pointer_basis(outcomes[b]);
        const Complex c0 = std::conj(bra.amplitudes[0]);
        const Complex c1 = std::conj(bra.amplitudes[1]);
        for (std::size_t x = 0; x < d; ++x) {
            projected[x] = c0 * joint.at(x, 0) + c1 * joint.at(x, 1);
        }
        for (std::size_t k = 0; k < d; ++k) {
            Complex amplitude{0.0, 0.0};
            for (std::size_t x = 0; x < d; ++x) {
                amplitude += twiddle[(k * x) % d] * projected[x];
            }
            dist[2 * k + b] = std::norm(amplitude);
        }
    }
    return dist;
}

CountTable sample_counts(std::span<const double> dist, std::uint64_t shots, std::uint64_t seed) {
    if (dist.size() < 4 || dist.size() % 2 != 0) {
        throw Error(ErrorCode::InvalidDistribution,
                    "distribution must have 2d >= 4 entries, got " + std::to_string(dist.size()));
    }
    if (shots == 0) {
        throw Error(ErrorCode::InvalidArgument, "shots must be >= 1");
    }
    double sum = 0.0;
    for (double p : dist) {
        if (!std::isfinite(p) || p < -1e-12) {
            throw Error(ErrorCode::InvalidDistribution, "distribution entry " + std::to_string(p) + " is invalid");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw Error(ErrorCode::InvalidDistribution, "distribution sums to " + std::to_string(sum));
    }

    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        if (dist[i] > 0.0) {
            last_positive = i;
        }
    }

    std::mt19937_64 rng(splitmix64(seed));
    std::vector<std::uint64_t> counts(dist.size(), 0);
    std::uint64_t remaining = shots;
    double remaining_mass = sum;
    for (std::size_t i = 0; i < last_positive && remaining > 0; ++i) {
        const double p = std::max(dist[i], 0.0);
        if (p == 0.0) {
            continue;
        }
        const double conditional = std::min(1.0, p / remaining_mass);
        std::uint64_t c = remaining;
        if (conditional < 1.0) {
            std::binomial_distribution<std::uint64_t> draw(remaining, conditional);
            c = draw(rng);
        }
        counts[i] = c;
        remaining -= c;
        remaining_mass -= p;
    }
    counts[last_positive] += remaining;
    return CountTable(dist.size() / 2, std::move(counts));
}

ProbabilitySet estimate_probset(const CountTable &x_table, const CountTable &y_table, const CountTable &z_table) {
    if (x_table.dim() != y_table.dim() || x_table.dim() != z_table.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "X/Y/Z count tables have different dimensions");
    }
    auto freq = [](const CountTable &t, std::size_t outcome) {
        return static_cast<double>(t.count(0, outcome)) / static_cast<double>(t.total());
    };
    ProbabilitySet p;
    p.p_plus = freq(x_table, 0);
    p.p_minus = freq(x_table, 1);
    p.p_L = freq(y_table, 0);
    p.p_R = freq(y_table, 1);
    p.p_zero = freq(z_table, 0);
    p.p_one = freq(z_table, 1);
    return p;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    return splitmix64(base ^ splitmix64(stream + 0x9e3779b97f4a7c15ULL));
}

std::vector<std::uint64_t> ShotPlan::allocate(std::size_t dim) const {
    const std::uint64_t settings = 3 * static_cast<std::uint64_t>(dim);
    std::vector<std::uint64_t> out(settings, shots);
    if (mode == Mode::TotalBudget) {
        const std::uint64_t base = shots / settings;
        const std::uint64_t remainder = shots % settings;
        for (std::uint64_t i = 0; i < settings; ++i) {
            out[i] = base + (i < remainder ? 1 : 0);
        }
    }
    if (std::find(out.begin(), out.end(), 0) != out.end()) {
        throw Error(ErrorCode::InvalidArgument, "shot budget " + std::to_string(shots) + " leaves some of the " +
                                                    std::to_string(settings) + " settings without shots");
    }
    return out;
}

SampledScan sample_scan(const SystemState &psi, const CouplingStrength &strength, const ShotPlan &plan,
                        std::uint64_t seed) {
    SampledScan scan;
    scan.shots = plan.allocate(psi.dim());
    scan.tables.reserve(scan.shots.size());
    scan.probsets.reserve(psi.dim());
    for (std::size_t x = 0; x < psi.dim(); ++x) {
        const JointState joint = apply_coupling(psi, x, strength);
        for (MeasurementBasis basis : kAllBases) {
            MeasurementSetting setting{x, basis, 0};
            setting.shots = scan.shots[setting.index()];
            const auto dist = outcome_distribution(joint, basis);
            scan.tables.push_back(sample_counts(dist, setting.shots, derive_seed(seed, setting.index())));
        }
        const std::size_t base = 3 * x;
        scan.probsets.push_back(estimate_probset(scan.tables[base], scan.tables[base + 1], scan.tables[base + 2]));
    }
    return scan;
}

ReconstructionResult reconstruct_sampled(const SystemState &psi, const CouplingStrength &strength,
                                         const ShotPlan &plan, std::uint64_t seed) {
    strength.require_reconstructible();
    SampledScan scan = sample_scan(psi, strength, plan, seed);
    const std::uint64_t min_shots = *std::min_element(scan.shots.begin(), scan.shots.end());
    ReconstructionResult result =
        reconstruct(scan.probsets, strength, sampled_vanishing_threshold(min_shots, psi.dim()));
    result.shots_used = std::move(scan.shots);
    return result;
}

}  // namespace dwm
