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

#ifndef DWM_IO_H
#define DWM_IO_H

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dwm/metrics.h"
#include "dwm/protocol.h"
#include "dwm/state.h"

namespace dwm {

enum class OutputFormat { Csv, Json };

OutputFormat parse_output_format(std::string_view text);

struct RunConfig {
    std::size_t dim = 0;
    /// Explicit amplitude list ("1,0.5i,-2+1i") or a preset: uniform,
    /// basis:k, gaussian:sigma, random:seed.
    std::string state = "uniform";
    std::vector<double> thetas;
    /// Total shot budget per scan; nullopt means exact probabilities.
    std::optional<std::uint64_t> shots_total;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    /// Empty writes to stdout.
    std::string output_path;
    OutputFormat format = OutputFormat::Csv;
};

/// Angle in radians. Accepts plain numbers and pi expressions such as
/// "pi", "pi/2", "3*pi/4", "-pi/8", "0.5pi".
double parse_angle(std::string_view text);
/// Comma-separated list of parse_angle terms.
std::vector<double> parse_angle_list(std::string_view text);
/// "exact" -> nullopt, otherwise a positive integer (scientific notation
/// such as "3e5" is accepted when it is integral).
std::optional<std::uint64_t> parse_shots(std::string_view text);
/// Complex literal: "0.6", "0.8i", "-i", "1-2i", "3e-1+4e-1i".
Complex parse_complex(std::string_view text);

/// Builds the system state named by `spec`. Throws Config on malformed
/// specs or when an explicit list does not have `dim` entries.
SystemState make_state(std::string_view spec, std::size_t dim);

struct ProbabilityRow {
    std::size_t x = 0;
    ProbabilitySet probs;
    double postselect = 0.0;

    bool operator==(const ProbabilityRow &) const = default;
};

struct ProbabilityReport {
    std::size_t dim = 0;
    double theta = 0.0;
    std::uint64_t seed = 0;
    std::vector<ProbabilityRow> exact;
    /// Empty unless shots were requested.
    std::vector<ProbabilityRow> estimated;
    std::vector<std::uint64_t> shots;

    bool operator==(const ProbabilityReport &) const = default;
};

struct ReconstructionReport {
    std::size_t dim = 0;
    double theta = 0.0;
    std::uint64_t seed = 0;
    std::vector<Complex> estimate;
    std::vector<Complex> truth;
    double fidelity = 0.0;
    double tilde_psi_magnitude = 0.0;
    std::vector<double> postselection;
    /// Empty for exact reconstructions.
    std::vector<std::uint64_t> shots;

    bool operator==(const ReconstructionReport &) const = default;
};

struct SweepReport {
    std::size_t dim = 0;
    std::uint64_t seed = 0;
    std::vector<TrialStatistics> rows;

    bool operator==(const SweepReport &) const = default;
};

/// Columns: x,p_plus,p_minus,p_zero,p_one,p_L,p_R,p_postselect
std::string probabilities_to_csv(std::span<const ProbabilityRow> rows);
std::vector<ProbabilityRow> probabilities_from_csv(std::string_view text);

/// Columns: x,re_psi,im_psi,re_true,im_true. Only estimate, truth and dim
/// survive a CSV round trip.
std::string reconstruction_to_csv(const ReconstructionReport &report);
ReconstructionReport reconstruction_from_csv(std::string_view text);

/// Columns: theta,shots_total,trials,failed_trials,mean_fidelity,rmse_l2,bias_l2,std_l2,rmse_stderr
std::string sweep_to_csv(std::span<const TrialStatistics> rows);
std::vector<TrialStatistics> sweep_from_csv(std::string_view text);

std::string to_json(const ProbabilityReport &report);
std::string to_json(const ReconstructionReport &report);
std::string to_json(const SweepReport &report);
ProbabilityReport probability_report_from_json(std::string_view text);
ReconstructionReport reconstruction_report_from_json(std::string_view text);
SweepReport sweep_report_from_json(std::string_view text);

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path &path, std::string_view content);
std::string read_file(const std::filesystem::path &path);

}  // namespace dwm

#endif
