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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <numbers>
#include <sstream>

#include "dwm/io.h"

using namespace dwm;

namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "dwm");
    std::vector<const char *> argv;
    for (auto &a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class CliFiles : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("dwm_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::remove_all(dir_);
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override {
        std::filesystem::remove_all(dir_);
    }
    std::string path(const std::string &name) const {
        return (dir_ / name).string();
    }

    std::filesystem::path dir_;
};

}  // namespace

TEST(cli, simulate_basis_state_exact) {
    auto r = invoke({"simulate", "--dim", "2", "--state", "basis:0", "--theta", "1.5707963", "--shots", "exact"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto rows = probabilities_from_csv(r.out);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0].x, 0u);
    EXPECT_NEAR(rows[0].probs.p_one, 0.5, 1e-12);
    EXPECT_NEAR(rows[0].postselect, 0.5, 1e-12);
    EXPECT_NEAR(rows[1].probs.p_one, 0.0, 1e-15);
}

TEST(cli, missing_dim_is_a_config_error) {
    auto r = invoke({"simulate", "--state", "uniform"});
    EXPECT_EQ(r.code, cli::kConfigError);
    EXPECT_NE(r.err.find("--dim"), std::string::npos);
    EXPECT_NE(r.err.find("Usage"), std::string::npos);
}

TEST(cli, config_errors) {
    EXPECT_EQ(invoke({}).code, cli::kConfigError);
    EXPECT_EQ(invoke({"simulate", "--dim", "2", "--format", "xml"}).code, cli::kConfigError);
    EXPECT_EQ(invoke({"simulate", "--dim", "2", "--theta", "4"}).code, cli::kConfigError);
    EXPECT_EQ(invoke({"simulate", "--dim", "3", "--state", "1,2"}).code, cli::kConfigError);
    EXPECT_EQ(invoke({"simulate", "--dim", "2", "--shots", "0"}).code, cli::kConfigError);
    EXPECT_EQ(invoke({"simulate", "--dim", "2", "--theta", "0.1,0.2"}).code, cli::kConfigError);
    EXPECT_EQ(invoke({"reconstruct", "--dim", "4", "--shots", "5"}).code, cli::kConfigError);
    EXPECT_EQ(invoke({"bogus"}).code, cli::kConfigError);
}

TEST(cli, help_exits_cleanly) {
    auto r = invoke({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("reconstruct"), std::string::npos);
}

TEST(cli, degenerate_angle_exit_code) {
    for (const char *theta : {"0", "pi"}) {
        for (const char *cmd : {"simulate", "reconstruct"}) {
            auto r = invoke({cmd, "--dim", "2", "--theta", theta});
            EXPECT_EQ(r.code, cli::kDegenerate) << cmd << " " << theta;
            EXPECT_NE(r.err.find("DegenerateAngle"), std::string::npos);
        }
    }
    EXPECT_EQ(invoke({"sweep", "--dim", "2", "--theta", "0,pi/2", "--trials", "2"}).code, cli::kDegenerate);
}

TEST(cli, vanishing_tilde_psi_exit_code) {
    auto r = invoke({"reconstruct", "--dim", "2", "--state", "1,-1"});
    EXPECT_EQ(r.code, cli::kDegenerate);
    EXPECT_NE(r.err.find("VanishingTildePsi"), std::string::npos);
}

TEST(cli, reconstruct_uniform_exact_json) {
    auto r = invoke({"reconstruct", "--dim", "4", "--state", "uniform", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto report = reconstruction_report_from_json(r.out);
    EXPECT_NEAR(report.fidelity, 1.0, 1e-10);
    ASSERT_EQ(report.estimate.size(), 4u);
    for (auto a : report.estimate) EXPECT_NEAR(std::abs(a - 0.5), 0.0, 1e-12);
    EXPECT_NEAR(report.tilde_psi_magnitude, 2.0, 1e-12);
    EXPECT_TRUE(report.shots.empty());
}

TEST(cli, reconstruct_random_state_sampled) {
    int seed = 0;
    while (std::abs(make_state("random:" + std::to_string(seed), 8).amplitude_sum()) <= 0.5) ++seed;
    auto r = invoke({"reconstruct", "--dim", "8", "--state", "random:" + std::to_string(seed), "--shots", "3e6",
                     "--seed", "12", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto report = reconstruction_report_from_json(r.out);
    EXPECT_GT(report.fidelity, 0.999);
    EXPECT_EQ(report.shots.size(), 24u);
}

TEST(cli, reconstruct_csv_columns) {
    auto r = invoke({"reconstruct", "--dim", "3", "--state", "1,2i,-1+i", "--theta", "pi/3"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto report = reconstruction_from_csv(r.out);
    ASSERT_EQ(report.dim, 3u);
    EXPECT_NEAR(std::abs(report.truth[1] - Complex(0, 2 / std::sqrt(7.0))), 0.0, 1e-15);
}

TEST(cli, sweep_rows) {
    auto r = invoke({"sweep", "--dim", "4", "--state", "gaussian:1.0", "--theta", "0.1,pi/2", "--shots", "30000",
                     "--trials", "20", "--seed", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto rows = sweep_from_csv(r.out);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_LT(rows[1].rmse_l2, rows[0].rmse_l2);
    EXPECT_EQ(rows[0].shots_total, 30000u);
    EXPECT_EQ(rows[0].trials, 20u);
}

TEST(cli, sweep_needs_two_angles) {
    EXPECT_EQ(invoke({"sweep", "--dim", "4", "--theta", "pi/2"}).code, cli::kConfigError);
    EXPECT_EQ(invoke({"sweep", "--dim", "4", "--theta", "0.1,pi/2", "--trials", "1"}).code, cli::kConfigError);
}

TEST(cli, sweep_exact_mode) {
    auto r = invoke({"sweep", "--dim", "5", "--state", "random:3", "--theta", "0.1,1,pi/2", "--trials", "2",
                     "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto report = sweep_report_from_json(r.out);
    ASSERT_EQ(report.rows.size(), 3u);
    for (auto &row : report.rows) {
        EXPECT_LT(row.rmse_l2, 1e-9);
        EXPECT_FALSE(row.shots_total.has_value());
    }
}

TEST_F(CliFiles, simulate_writes_exact_and_sampled_files) {
    auto out = path("probs.csv");
    auto r = invoke({"simulate", "--dim", "3", "--state", "gaussian:0.8", "--theta", "1.0", "--shots", "90000",
                     "--seed", "8", "--out", out});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(cli::sampled_sibling_path(out), path("probs.sampled.csv"));
    auto exact = probabilities_from_csv(read_file(out));
    auto sampled = probabilities_from_csv(read_file(path("probs.sampled.csv")));
    ASSERT_EQ(exact.size(), 3u);
    ASSERT_EQ(sampled.size(), 3u);
    for (size_t x = 0; x < 3; ++x) {
        EXPECT_NEAR(sampled[x].probs.p_one, exact[x].probs.p_one, 0.02);
    }

    auto json_out = path("probs.json");
    ASSERT_EQ(invoke({"simulate", "--dim", "3", "--state", "gaussian:0.8", "--theta", "1.0", "--shots", "90000",
                      "--seed", "8", "--format", "json", "--out", json_out})
                  .code,
              0);
    auto report = probability_report_from_json(read_file(json_out));
    EXPECT_EQ(report.exact, exact);
    EXPECT_EQ(report.estimated, sampled);
    EXPECT_EQ(report.shots, std::vector<std::uint64_t>(9, 10000));
}

TEST_F(CliFiles, identical_config_gives_identical_bytes) {
    for (std::string cmd : {"simulate", "reconstruct", "sweep"}) {
        for (std::string format : {"csv", "json"}) {
            std::string theta = cmd == "sweep" ? "0.6,pi/2" : "1.2";
            std::vector<std::string> args = {cmd,      "--dim",  "4",     "--state", "gaussian:1", "--theta", theta,
                                             "--shots", "12000", "--trials", "8",   "--seed",  "99", "--format",
                                             format};
            auto a = args, b = args;
            a.insert(a.end(), {"--out", path("a")});
            b.insert(b.end(), {"--out", path("b")});
            ASSERT_EQ(invoke(a).code, 0);
            ASSERT_EQ(invoke(b).code, 0);
            EXPECT_EQ(read_file(path("a")), read_file(path("b"))) << cmd << " " << format;
        }
    }
}
