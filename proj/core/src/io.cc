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

#include "dwm/io.h"

#include <unistd.h>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "dwm/errors.h"
#include "dwm/sampler.h"
#include "json.hpp"

namespace dwm {

using Json = nlohmann::ordered_json;

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

[[noreturn]] void config_error(const std::string &message) {
    throw Error(ErrorCode::Config, message);
}

/// Parses the whole of `text` as a double; Config error otherwise.
double parse_number(std::string_view text) {
    const std::string s(trim(text));
    if (s.empty()) {
        config_error("expected a number, got an empty string");
    }
    char *end = nullptr;
    const double value = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size()) {
        config_error("'" + s + "' is not a number");
    }
    return value;
}

std::uint64_t parse_count(std::string_view text) {
    const double v = parse_number(text);
    if (!(v >= 0.0) || v != std::floor(v) || v > 1.8e19) {
        config_error("'" + std::string(text) + "' is not a nonnegative integer");
    }
    return static_cast<std::uint64_t>(v);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<std::vector<std::string_view>> read_csv(std::string_view text, std::string_view header) {
    auto lines = split(text, '\n');
    while (!lines.empty() && trim(lines.back()).empty()) {
        lines.pop_back();
    }
    if (lines.empty() || trim(lines.front()) != header) {
        config_error("CSV header does not match '" + std::string(header) + "'");
    }
    const std::size_t columns = split(header, ',').size();
    std::vector<std::vector<std::string_view>> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto fields = split(trim(lines[i]), ',');
        if (fields.size() != columns) {
            config_error("CSV line " + std::to_string(i + 1) + " has " + std::to_string(fields.size()) + " fields");
        }
        rows.push_back(std::move(fields));
    }
    return rows;
}

Json complex_array(std::span<const Complex> values) {
    Json out = Json::array();
    for (const auto &c : values) {
        out.push_back(Json::array({c.real(), c.imag()}));
    }
    return out;
}

std::vector<Complex> complex_vector(const Json &j) {
    std::vector<Complex> out;
    for (const auto &c : j) {
        out.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
    }
    return out;
}

Json probability_rows(std::span<const ProbabilityRow> rows) {
    Json out = Json::array();
    for (const auto &r : rows) {
        out.push_back(Json{
            {"x", r.x},
            {"p_plus", r.probs.p_plus},
            {"p_minus", r.probs.p_minus},
            {"p_zero", r.probs.p_zero},
            {"p_one", r.probs.p_one},
            {"p_L", r.probs.p_L},
            {"p_R", r.probs.p_R},
            {"p_postselect", r.postselect},
        });
    }
    return out;
}

std::vector<ProbabilityRow> probability_rows(const Json &j) {
    std::vector<ProbabilityRow> out;
    for (const auto &r : j) {
        ProbabilityRow row;
        row.x = r.at("x").get<std::size_t>();
        row.probs.p_plus = r.at("p_plus").get<double>();
        row.probs.p_minus = r.at("p_minus").get<double>();
        row.probs.p_zero = r.at("p_zero").get<double>();
        row.probs.p_one = r.at("p_one").get<double>();
        row.probs.p_L = r.at("p_L").get<double>();
        row.probs.p_R = r.at("p_R").get<double>();
        row.postselect = r.at("p_postselect").get<double>();
        out.push_back(row);
    }
    return out;
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception &e) {
        config_error(std::string("malformed JSON: ") + e.what());
    }
}

template <typename F>
auto with_json_errors(F &&f) {
    try {
        return f();
    } catch (const Json::exception &e) {
        config_error(std::string("unexpected JSON layout: ") + e.what());
    }
}

}  // namespace

OutputFormat parse_output_format(std::string_view text) {
    if (text == "csv") {
        return OutputFormat::Csv;
    }
    if (text == "json") {
        return OutputFormat::Json;
    }
    config_error("unknown format '" + std::string(text) + "' (expected csv or json)");
}

double parse_angle(std::string_view text) {
    const std::string_view s = trim(text);
    const std::size_t pi_pos = s.find("pi");
    if (pi_pos == std::string_view::npos) {
        return parse_number(s);
    }
    std::string_view prefix = trim(s.substr(0, pi_pos));
    std::string_view suffix = trim(s.substr(pi_pos + 2));
    double factor = 1.0;
    if (!prefix.empty() && prefix.back() == '*') {
        prefix.remove_suffix(1);
    }
    if (prefix == "-") {
        factor = -1.0;
    } else if (!prefix.empty() && prefix != "+") {
        factor = parse_number(prefix);
    }
    double divisor = 1.0;
    if (!suffix.empty()) {
        if (suffix.front() != '/') {
            config_error("cannot parse angle '" + std::string(s) + "'");
        }
        divisor = parse_number(suffix.substr(1));
        if (divisor == 0.0) {
            config_error("division by zero in angle '" + std::string(s) + "'");
        }
    }
    return factor * std::numbers::pi / divisor;
}

std::vector<double> parse_angle_list(std::string_view text) {
    std::vector<double> out;
    for (auto term : split(text, ',')) {
        out.push_back(parse_angle(term));
    }
    return out;
}

std::optional<std::uint64_t> parse_shots(std::string_view text) {
    const std::string_view s = trim(text);
    if (s == "exact") {
        return std::nullopt;
    }
    const std::uint64_t n = parse_count(s);
    if (n == 0) {
        config_error("shots must be positive or 'exact'");
    }
    return n;
}

Complex parse_complex(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) {
        config_error("empty amplitude");
    }
    if (s.back() != 'i') {
        return {parse_number(s), 0.0};
    }
    s.remove_suffix(1);
    // Split at the last sign that is not the leading one or part of an exponent.
    std::size_t split_at = std::string_view::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split_at = i;
            break;
        }
    }
    auto imaginary = [](std::string_view part) {
        part = trim(part);
        if (part.empty() || part == "+") {
            return 1.0;
        }
        if (part == "-") {
            return -1.0;
        }
        return parse_number(part);
    };
    if (split_at == std::string_view::npos) {
        return {0.0, imaginary(s)};
    }
    return {parse_number(s.substr(0, split_at)), imaginary(s.substr(split_at))};
}

SystemState make_state(std::string_view spec, std::size_t dim) {
    if (dim < 2) {
        config_error("--dim must be >= 2");
    }
    const std::string_view s = trim(spec);
    const std::size_t colon = s.find(':');
    const std::string_view name = s.substr(0, colon);
    const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : s.substr(colon + 1);

    if (s == "uniform") {
        return momentum_zero_state(dim);
    }
    if (name == "basis" && colon != std::string_view::npos) {
        const std::uint64_t k = parse_count(arg);
        if (k >= dim) {
            config_error("basis index " + std::to_string(k) + " out of range for d=" + std::to_string(dim));
        }
        std::vector<Complex> amplitudes(dim);
        amplitudes[k] = 1.0;
        return make_system_state(amplitudes);
    }
    if (name == "gaussian" && colon != std::string_view::npos) {
        const double sigma = parse_number(arg);
        if (!(sigma > 0.0)) {
            config_error("gaussian width must be positive");
        }
        const double center = (static_cast<double>(dim) - 1.0) / 2.0;
        std::vector<Complex> amplitudes(dim);
        for (std::size_t x = 0; x < dim; ++x) {
            const double offset = static_cast<double>(x) - center;
            amplitudes[x] = std::exp(-offset * offset / (4.0 * sigma * sigma));
        }
        return make_system_state(amplitudes);
    }
    if (name == "random" && colon != std::string_view::npos) {
        std::mt19937_64 rng(derive_seed(parse_count(arg), 0));
        std::normal_distribution<double> normal;
        while (true) {
            std::vector<Complex> amplitudes(dim);
            for (auto &a : amplitudes) {
                const double re = normal(rng);
                const double im = normal(rng);
                a = {re, im};
            }
            SystemState psi = make_system_state(amplitudes);
            if (std::abs(psi.amplitude_sum()) > 0.1) {
                return psi;
            }
        }
    }

    std::vector<Complex> amplitudes;
    for (auto term : split(s, ',')) {
        amplitudes.push_back(parse_complex(term));
    }
    if (amplitudes.size() != dim) {
        config_error("state '" + std::string(s) + "' has " + std::to_string(amplitudes.size()) +
                     " amplitudes but --dim is " + std::to_string(dim));
    }
    return make_system_state(amplitudes);
}

std::string probabilities_to_csv(std::span<const ProbabilityRow> rows) {
    std::string out = "x,p_plus,p_minus,p_zero,p_one,p_L,p_R,p_postselect\n";
    for (const auto &r : rows) {
        out += std::to_string(r.x);
        for (double v : {r.probs.p_plus, r.probs.p_minus, r.probs.p_zero, r.probs.p_one, r.probs.p_L, r.probs.p_R,
                         r.postselect}) {
            out += ',';
            out += format_double(v);
        }
        out += '\n';
    }
    return out;
}

std::vector<ProbabilityRow> probabilities_from_csv(std::string_view text) {
    std::vector<ProbabilityRow> out;
    for (const auto &f : read_csv(text, "x,p_plus,p_minus,p_zero,p_one,p_L,p_R,p_postselect")) {
        ProbabilityRow r;
        r.x = parse_count(f[0]);
        r.probs.p_plus = parse_number(f[1]);
        r.probs.p_minus = parse_number(f[2]);
        r.probs.p_zero = parse_number(f[3]);
        r.probs.p_one = parse_number(f[4]);
        r.probs.p_L = parse_number(f[5]);
        r.probs.p_R = parse_number(f[6]);
        r.postselect = parse_number(f[7]);
        out.push_back(r);
    }
    return out;
}

std::string reconstruction_to_csv(const ReconstructionReport &report) {
    std::string out = "x,re_psi,im_psi,re_true,im_true\n";
    for (std::size_t x = 0; x < report.estimate.size(); ++x) {
        const Complex truth = x < report.truth.size() ? report.truth[x] : Complex{NAN, NAN};
        out += std::to_string(x) + ',' + format_double(report.estimate[x].real()) + ',' +
               format_double(report.estimate[x].imag()) + ',' + format_double(truth.real()) + ',' +
               format_double(truth.imag()) + '\n';
    }
    return out;
}

ReconstructionReport reconstruction_from_csv(std::string_view text) {
    ReconstructionReport report;
    for (const auto &f : read_csv(text, "x,re_psi,im_psi,re_true,im_true")) {
        if (parse_count(f[0]) != report.estimate.size()) {
            config_error("reconstruction CSV rows are not in x order");
        }
        report.estimate.emplace_back(parse_number(f[1]), parse_number(f[2]));
        report.truth.emplace_back(parse_number(f[3]), parse_number(f[4]));
    }
    report.dim = report.estimate.size();
    return report;
}

std::string sweep_to_csv(std::span<const TrialStatistics> rows) {
    std::string out = "theta,shots_total,trials,failed_trials,mean_fidelity,rmse_l2,bias_l2,std_l2,rmse_stderr\n";
    for (const auto &r : rows) {
        out += format_double(r.theta) + ',';
        out += r.shots_total ? std::to_string(*r.shots_total) : std::string("exact");
        out += ',' + std::to_string(r.trials) + ',' + std::to_string(r.failed_trials);
        for (double v : {r.mean_fidelity, r.rmse_l2, r.bias_l2, r.std_l2, r.rmse_stderr}) {
            out += ',';
            out += format_double(v);
        }
        out += '\n';
    }
    return out;
}

std::vector<TrialStatistics> sweep_from_csv(std::string_view text) {
    std::vector<TrialStatistics> out;
    for (const auto &f :
         read_csv(text, "theta,shots_total,trials,failed_trials,mean_fidelity,rmse_l2,bias_l2,std_l2,rmse_stderr")) {
        TrialStatistics s;
        s.theta = parse_number(f[0]);
        if (trim(f[1]) != "exact") {
            s.shots_total = parse_count(f[1]);
        }
        s.trials = parse_count(f[2]);
        s.failed_trials = parse_count(f[3]);
        s.mean_fidelity = parse_number(f[4]);
        s.rmse_l2 = parse_number(f[5]);
        s.bias_l2 = parse_number(f[6]);
        s.std_l2 = parse_number(f[7]);
        s.rmse_stderr = parse_number(f[8]);
        out.push_back(s);
    }
    return out;
}

std::string to_json(const ProbabilityReport &report) {
    Json j{
        {"dim", report.dim},
        {"theta", report.theta},
        {"seed", report.seed},
        {"shots", report.shots.empty() ? Json("exact") : Json(report.shots)},
        {"exact", probability_rows(report.exact)},
        {"estimated", probability_rows(report.estimated)},
    };
    return j.dump(2) + "\n";
}

std::string to_json(const ReconstructionReport &report) {
    Json j{
        {"dim", report.dim},
        {"theta", report.theta},
        {"seed", report.seed},
        {"shots", report.shots.empty() ? Json("exact") : Json(report.shots)},
        {"fidelity", report.fidelity},
        {"tilde_psi_magnitude", report.tilde_psi_magnitude},
        {"postselection", report.postselection},
        {"estimate", complex_array(report.estimate)},
        {"truth", complex_array(report.truth)},
    };
    return j.dump(2) + "\n";
}

std::string to_json(const SweepReport &report) {
    Json rows = Json::array();
    for (const auto &r : report.rows) {
        rows.push_back(Json{
            {"theta", r.theta},
            {"shots_total", r.shots_total ? Json(*r.shots_total) : Json("exact")},
            {"trials", r.trials},
            {"failed_trials", r.failed_trials},
            {"mean_fidelity", r.mean_fidelity},
            {"rmse_l2", r.rmse_l2},
            {"bias_l2", r.bias_l2},
            {"std_l2", r.std_l2},
            {"rmse_stderr", r.rmse_stderr},
        });
    }
    Json j{{"dim", report.dim}, {"seed", report.seed}, {"rows", rows}};
    return j.dump(2) + "\n";
}

namespace {

std::vector<std::uint64_t> shots_field(const Json &j) {
    if (j.is_string()) {
        return {};
    }
    return j.get<std::vector<std::uint64_t>>();
}

}  // namespace

ProbabilityReport probability_report_from_json(std::string_view text) {
    const Json j = parse_json(text);
    return with_json_errors([&] {
        ProbabilityReport r;
        r.dim = j.at("dim").get<std::size_t>();
        r.theta = j.at("theta").get<double>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.shots = shots_field(j.at("shots"));
        r.exact = probability_rows(j.at("exact"));
        r.estimated = probability_rows(j.at("estimated"));
        return r;
    });
}

ReconstructionReport reconstruction_report_from_json(std::string_view text) {
    const Json j = parse_json(text);
    return with_json_errors([&] {
        ReconstructionReport r;
        r.dim = j.at("dim").get<std::size_t>();
        r.theta = j.at("theta").get<double>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.shots = shots_field(j.at("shots"));
        r.fidelity = j.at("fidelity").get<double>();
        r.tilde_psi_magnitude = j.at("tilde_psi_magnitude").get<double>();
        r.postselection = j.at("postselection").get<std::vector<double>>();
        r.estimate = complex_vector(j.at("estimate"));
        r.truth = complex_vector(j.at("truth"));
        return r;
    });
}

SweepReport sweep_report_from_json(std::string_view text) {
    const Json j = parse_json(text);
    return with_json_errors([&] {
        SweepReport r;
        r.dim = j.at("dim").get<std::size_t>();
        r.seed = j.at("seed").get<std::uint64_t>();
        for (const auto &row : j.at("rows")) {
            TrialStatistics s;
            s.theta = row.at("theta").get<double>();
            if (!row.at("shots_total").is_string()) {
                s.shots_total = row.at("shots_total").get<std::uint64_t>();
            }
            s.trials = row.at("trials").get<std::size_t>();
            s.failed_trials = row.at("failed_trials").get<std::size_t>();
            s.mean_fidelity = row.at("mean_fidelity").get<double>();
            s.rmse_l2 = row.at("rmse_l2").get<double>();
            s.bias_l2 = row.at("bias_l2").get<double>();
            s.std_l2 = row.at("std_l2").get<double>();
            s.rmse_stderr = row.at("rmse_stderr").get<double>();
            r.rows.push_back(s);
        }
        return r;
    });
}

void write_file_atomic(const std::filesystem::path &path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error(ErrorCode::Io, "cannot open " + tmp.string() + " for writing");
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) {
            throw Error(ErrorCode::Io, "failed writing " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw Error(ErrorCode::Io, "cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
    }
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::Io, "cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace dwm
