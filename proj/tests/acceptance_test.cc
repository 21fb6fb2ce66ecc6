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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.h"
#include "dwm/errors.h"
#include "dwm/io.h"
#include "dwm/metrics.h"
#include "dwm/protocol.h"
#include "dwm/reconstruction.h"
#include "dwm/sampler.h"
#include "oracle.h"

using namespace dwm;

namespace {

constexpr double kPi = std::numbers::pi;

struct Verdict {
    bool pass;
    std::string detail;
};

struct PropertyCase {
    SystemState psi;
    std::size_t x;
    double theta;
};

/// 100 random (psi, x, theta) cases with 2 <= d <= 16.
std::vector<PropertyCase> property_cases() {
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<std::size_t> pick_d(2, 16);
    std::uniform_real_distribution<double> pick_theta(0.0, kPi);
    std::vector<PropertyCase> cases;
    for (int i = 0; i < 100; ++i) {
        const std::size_t d = pick_d(rng);
        auto psi = make_system_state(oracle::random_state(rng, d));
        const std::size_t x = std::uniform_int_distribution<std::size_t>(0, d - 1)(rng);
        cases.push_back({psi, x, pick_theta(rng)});
    }
    return cases;
}

std::string fmt(const char *format, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

template <typename F>
ErrorCode caught(F &&f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    return ErrorCode::Io;
}

int cli_exit(std::vector<std::string> args) {
    args.insert(args.begin(), "dwm");
    std::vector<const char *> argv;
    for (auto &a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    return cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
}

Verdict joint_vs_conditional_identity() {
    const auto start = std::chrono::steady_clock::now();
    double worst_joint = 0.0;
    double worst_bayes = 0.0;
    for (const auto &c : property_cases()) {
        const JointState joint = apply_coupling(c.psi, c.x, CouplingStrength(c.theta));
        const ProbabilitySet via_pointer = probabilities_from_pointer(pointer_collapse(joint));
        const oracle::Vec dense(joint.amplitudes().begin(), joint.amplitudes().end());
        const double post = postselection_probability(joint);
        const ProbabilitySet conditional = conditional_probabilities(via_pointer);
        for (auto label : kAllPointerLabels) {
            const std::string name(pointer_label_name(label));
            const double full_bra =
                oracle::projection_probability(dense, oracle::p0(c.psi.dim()), oracle::pointer(name.c_str()));
            worst_joint = std::max({worst_joint, std::abs(via_pointer.get(label) - full_bra),
                                    std::abs(via_pointer.get(label) - joint_probability(joint, label))});
            worst_bayes = std::max(worst_bayes, std::abs(conditional.get(label) - via_pointer.get(label) / post));
        }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {worst_joint <= 1e-14 && worst_bayes <= 1e-12 && seconds < 1.0,
            fmt("max|pointer route - joint route|=%.2e (<=1e-14) max|cond-joint/post|=%.2e (<=1e-12) %.3fs (<1s)", worst_joint,
                worst_bayes, seconds)};
}

Verdict exact_round_trip() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<std::size_t> pick_d(2, 16);
    std::uniform_real_distribution<double> pick_theta(0.05, kPi - 0.05);
    double worst = 1.0;
    int count = 0;
    while (count < 200) {
        const std::size_t d = pick_d(rng);
        auto v = oracle::random_state(rng, d);
        if (std::abs(oracle::sum(v)) <= 0.1) {
            continue;
        }
        const auto psi = make_system_state(v);
        const double theta = pick_theta(rng);
        worst = std::min(worst, fidelity(reconstruct_exact(psi, CouplingStrength(theta)).estimate, psi));
        ++count;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {worst >= 1 - 1e-10 && seconds < 5.0,
            fmt("min fidelity=1-%.2e (>=1-1e-10) over %d states, %.3fs (<5s)", 1 - worst, count, seconds)};
}

Verdict postselection_identity() {
    double worst = 0.0;
    for (const auto &c : property_cases()) {
        const JointState joint = apply_coupling(c.psi, c.x, CouplingStrength(c.theta));
        const double norm = postselection_probability(joint);
        const double traced = postselection_probability_traced(joint);
        const ProbabilitySet p = joint_probabilities(joint);
        const oracle::Vec dense(joint.amplitudes().begin(), joint.amplitudes().end());
        worst = std::max({worst, std::abs(norm - traced), std::abs(norm - (p.p_plus + p.p_minus)),
                          std::abs(norm - oracle::traced_postselection(dense))});
    }
    return {worst <= 1e-12, fmt("max deviation=%.2e (<=1e-12)", worst)};
}

double log_log_slope(const std::vector<double> &xs, const std::vector<double> &ys) {
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += std::log(xs[i]) / double(xs.size());
        my += std::log(ys[i]) / double(xs.size());
    }
    double num = 0, den = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        num += (std::log(xs[i]) - mx) * (std::log(ys[i]) - my);
        den += (std::log(xs[i]) - mx) * (std::log(xs[i]) - mx);
    }
    return num / den;
}

Verdict sampled_convergence() {
    const auto start = std::chrono::steady_clock::now();
    const SystemState psi = momentum_zero_state(4);
    const CouplingStrength strength(kPi / 2);
    const auto budget =
        run_trials(psi, strength, {.shots = ShotPlan::total_budget(300000), .trials = 100, .seed = 4001});

    std::vector<double> shots = {1e3, 1e4, 1e5};
    std::vector<double> rmse;
    for (double n : shots) {
        auto stats = run_trials(psi, strength,
                                {.shots = ShotPlan::per_setting(std::uint64_t(n)), .trials = 100, .seed = 4002});
        rmse.push_back(stats.rmse_l2);
    }
    const double slope = log_log_slope(shots, rmse);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {budget.mean_fidelity > 0.999 && std::abs(slope + 0.5) <= 0.05 && seconds < 60.0,
            fmt("mean fidelity=%.6f (>0.999) slope=%.4f (-0.5+-0.05; rmse %.3e/%.3e/%.3e) %.2fs (<60s)",
                budget.mean_fidelity, slope, rmse[0], rmse[1], rmse[2], seconds)};
}

Verdict strong_beats_weak() {
    const auto start = std::chrono::steady_clock::now();
    const SystemState psi = make_state("gaussian:1.0", 4);
    const std::vector<double> thetas = {0.1, kPi / 2};
    const auto rows =
        theta_sweep(psi, thetas, {.shots = ShotPlan::total_budget(300000), .trials = 200, .seed = 5001});
    const double separation = rows[0].rmse_l2 - rows[1].rmse_l2;
    const double combined = std::hypot(rows[0].rmse_stderr, rows[1].rmse_stderr);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {rows[1].rmse_l2 < rows[0].rmse_l2 && separation >= 3 * combined && seconds < 120.0,
            fmt("rmse(0.1)=%.4e rmse(pi/2)=%.4e separation=%.1f combined SE (>=3) "
                "[precision std %.2e vs %.2e, accuracy bias %.2e vs %.2e] %.2fs (<120s)",
                rows[0].rmse_l2, rows[1].rmse_l2, separation / combined, rows[0].std_l2, rows[1].std_l2,
                rows[0].bias_l2, rows[1].bias_l2, seconds)};
}

Verdict degenerate_handling() {
    const auto psi = make_system_state({1.0, 0.0});
    const bool zero = caught([&] { reconstruct_exact(psi, CouplingStrength(0.0)); }) == ErrorCode::DegenerateAngle;
    const bool pi = caught([&] { reconstruct_exact(psi, CouplingStrength(kPi)); }) == ErrorCode::DegenerateAngle;
    const bool vanishing = caught([] {
                               reconstruct_exact(make_system_state({1.0, -1.0}), CouplingStrength(kPi / 2));
                           }) == ErrorCode::VanishingTildePsi;
    const int exit_zero = cli_exit({"reconstruct", "--dim", "2", "--state", "basis:0", "--theta", "0"});
    const int exit_pi = cli_exit({"reconstruct", "--dim", "2", "--state", "basis:0", "--theta", "pi"});
    const int exit_vanishing = cli_exit({"reconstruct", "--dim", "2", "--state", "1,-1"});
    return {zero && pi && vanishing && exit_zero == 3 && exit_pi == 3 && exit_vanishing == 3,
            fmt("DegenerateAngle(0)=%d DegenerateAngle(pi)=%d VanishingTildePsi=%d exit codes %d/%d/%d (all 3)",
                zero, pi, vanishing, exit_zero, exit_pi, exit_vanishing)};
}

Verdict determinism() {
    int compared = 0;
    int identical = 0;
    for (auto format : {OutputFormat::Csv, OutputFormat::Json}) {
        RunConfig config;
        config.dim = 4;
        config.state = "gaussian:1.0";
        config.shots_total = 60000;
        config.trials = 16;
        config.seed = 7007;
        config.format = format;
        config.thetas = {1.1};
        for (auto command : {cli::cmd_simulate, cli::cmd_reconstruct}) {
            const auto a = command(config);
            const auto b = command(config);
            ++compared;
            identical += a.payload == b.payload && a.sampled == b.sampled;
        }
        config.thetas = {0.3, kPi / 2};
        ++compared;
        identical += cli::cmd_sweep(config).payload == cli::cmd_sweep(config).payload;
    }
    return {compared == identical, fmt("%d/%d payloads byte-identical", identical, compared)};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Verdict()>>> criteria = {
        {"joint-vs-conditional identity", joint_vs_conditional_identity},
        {"exact round-trip", exact_round_trip},
        {"post-selection identity", postselection_identity},
        {"sampled-reconstruction convergence", sampled_convergence},
        {"strong beats weak", strong_beats_weak},
        {"degenerate handling", degenerate_handling},
        {"determinism", determinism},
    };
    int failures = 0;
    int index = 1;
    for (const auto &[name, check] : criteria) {
        Verdict v{false, ""};
        try {
            v = check();
        } catch (const std::exception &e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s [%d] %s: %s\n", v.pass ? "PASS" : "FAIL", index++, name, v.detail.c_str());
        failures += !v.pass;
    }
    std::fflush(stdout);
    return failures == 0 ? 0 : 1;
}
