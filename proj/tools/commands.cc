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

#include "commands.h"

#include <filesystem>
#include <iostream>
#include <vector>

#include "CLI11.hpp"
#include "dwm/errors.h"
#include "dwm/metrics.h"
#include "dwm/protocol.h"
#include "dwm/reconstruction.h"
#include "dwm/sampler.h"

namespace dwm::cli {

namespace {

CouplingStrength single_angle(const RunConfig &config) {
    if (config.thetas.size() != 1) {
        throw Error(ErrorCode::Config, "expected exactly one --theta value, got " + std::to_string(config.thetas.size()));
    }
    CouplingStrength strength(config.thetas.front());
    strength.require_reconstructible();
    return strength;
}

std::vector<ProbabilityRow> rows_from(const std::vector<ProbabilitySet> &probsets) {
    std::vector<ProbabilityRow> rows;
    for (std::size_t x = 0; x < probsets.size(); ++x) {
        rows.push_back({x, probsets[x], probsets[x].p_plus + probsets[x].p_minus});
    }
    return rows;
}

}  // namespace

CommandOutput cmd_simulate(const RunConfig &config) {
    const SystemState psi = make_state(config.state, config.dim);
    const CouplingStrength strength = single_angle(config);

    ProbabilityReport report;
    report.dim = psi.dim();
    report.theta = strength.theta();
    report.seed = config.seed;
    for (std::size_t x = 0; x < psi.dim(); ++x) {
        const JointState joint = apply_coupling(psi, x, strength);
        report.exact.push_back({x, joint_probabilities(joint), postselection_probability(joint)});
    }
    if (config.shots_total) {
        SampledScan scan = sample_scan(psi, strength, ShotPlan::total_budget(*config.shots_total), config.seed);
        report.estimated = rows_from(scan.probsets);
        report.shots = std::move(scan.shots);
    }

    if (config.format == OutputFormat::Json) {
        return {to_json(report), std::nullopt};
    }
    CommandOutput out{probabilities_to_csv(report.exact), std::nullopt};
    if (config.shots_total) {
        out.sampled = probabilities_to_csv(report.estimated);
    }
    return out;
}

CommandOutput cmd_reconstruct(const RunConfig &config) {
    const SystemState psi = make_state(config.state, config.dim);
    const CouplingStrength strength = single_angle(config);

    const ReconstructionResult result =
        config.shots_total
            ? reconstruct_sampled(psi, strength, ShotPlan::total_budget(*config.shots_total), config.seed)
            : reconstruct_exact(psi, strength);

    ReconstructionReport report;
    report.dim = psi.dim();
    report.theta = strength.theta();
    report.seed = config.seed;
    report.estimate.assign(result.estimate.amplitudes().begin(), result.estimate.amplitudes().end());
    report.truth.assign(psi.amplitudes().begin(), psi.amplitudes().end());
    report.fidelity = fidelity(result.estimate, psi);
    report.tilde_psi_magnitude = result.tilde_psi_magnitude;
    report.postselection = result.postselection;
    report.shots = result.shots_used;

    if (config.format == OutputFormat::Json) {
        return {to_json(report), std::nullopt};
    }
    return {reconstruction_to_csv(report), std::nullopt};
}

CommandOutput cmd_sweep(const RunConfig &config) {
    if (config.thetas.size() < 2) {
        throw Error(ErrorCode::Config, "sweep needs at least two --theta values");
    }
    if (config.trials < 2) {
        throw Error(ErrorCode::Config, "sweep needs --trials >= 2");
    }
    const SystemState psi = make_state(config.state, config.dim);
    for (double theta : config.thetas) {
        CouplingStrength(theta).require_reconstructible();
    }
    TrialOptions options;
    if (config.shots_total) {
        options.shots = ShotPlan::total_budget(*config.shots_total);
    }
    options.trials = config.trials;
    options.seed = config.seed;

    SweepReport report;
    report.dim = psi.dim();
    report.seed = config.seed;
    report.rows = theta_sweep(psi, config.thetas, options);

    if (config.format == OutputFormat::Json) {
        return {to_json(report), std::nullopt};
    }
    return {sweep_to_csv(report.rows), std::nullopt};
}

std::string sampled_sibling_path(const std::string &out) {
    std::filesystem::path p(out);
    std::filesystem::path sibling = p.parent_path() / p.stem();
    sibling += ".sampled";
    sibling += p.extension();
    return sibling.string();
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Direct wavefunction measurement with a qubit pointer: simulate, reconstruct, sweep"};
    app.require_subcommand(1);

    std::size_t dim = 0;
    std::string state = "uniform";
    std::string theta = "pi/2";
    std::string shots = "exact";
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string format = "csv";

    auto add_flags = [&](CLI::App *sub, bool theta_list) {
        sub->add_option("--dim", dim, "System dimension d (>= 2)")->required();
        sub->add_option("--state", state,
                        "Amplitude list (e.g. 1,0.5i,-1+2i) or preset: uniform, basis:k, gaussian:sigma, random:seed")
            ->capture_default_str();
        sub->add_option("--theta", theta,
                        theta_list ? "Comma-separated coupling angles in radians (pi/2 style allowed)"
                                   : "Coupling angle in radians (pi/2 style allowed)")
            ->capture_default_str();
        sub->add_option("--shots", shots, "Total shot budget per scan, or 'exact'")->capture_default_str();
        sub->add_option("--trials", trials, "Monte Carlo trials per angle")->capture_default_str();
        sub->add_option("--seed", seed, "64-bit RNG seed")->capture_default_str();
        sub->add_option("--out", out_path, "Output file (stdout when omitted)");
        sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    };
    CLI::App *simulate = app.add_subcommand("simulate", "Exact and sampled joint probabilities per position");
    CLI::App *reconstruct = app.add_subcommand("reconstruct", "Reconstruct the wavefunction from joint probabilities");
    CLI::App *sweep = app.add_subcommand("sweep", "Monte Carlo precision study over coupling angles");
    add_flags(simulate, false);
    add_flags(reconstruct, false);
    add_flags(sweep, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        err << app.help();
        return kConfigError;
    }

    try {
        RunConfig config;
        config.dim = dim;
        config.state = state;
        config.thetas = parse_angle_list(theta);
        config.shots_total = parse_shots(shots);
        config.trials = trials;
        config.seed = seed;
        config.output_path = out_path;
        config.format = parse_output_format(format);

        CommandOutput result;
        if (simulate->parsed()) {
            result = cmd_simulate(config);
        } else if (reconstruct->parsed()) {
            result = cmd_reconstruct(config);
        } else {
            result = cmd_sweep(config);
        }

        if (config.output_path.empty()) {
            out << result.payload;
            if (result.sampled) {
                out << '\n' << *result.sampled;
            }
        } else {
            write_file_atomic(config.output_path, result.payload);
            if (result.sampled) {
                write_file_atomic(sampled_sibling_path(config.output_path), *result.sampled);
            }
        }
        return kSuccess;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        if (is_protocol_degenerate(e.code())) {
            return kDegenerate;
        }
        return e.code() == ErrorCode::Io ? kInternalError : kConfigError;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
}

}  // namespace dwm::cli
