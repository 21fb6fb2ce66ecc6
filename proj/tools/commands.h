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

#ifndef DWM_TOOLS_COMMANDS_H
#define DWM_TOOLS_COMMANDS_H

#include <iosfwd>
#include <optional>
#include <string>

#include "dwm/io.h"

namespace dwm::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInternalError = 1,
    kConfigError = 2,
    kDegenerate = 3,
};

/// Serialized result of one subcommand. `sampled` holds the estimated
/// probability table when `simulate` writes CSV with finite shots.
struct CommandOutput {
    std::string payload;
    std::optional<std::string> sampled;
};

CommandOutput cmd_simulate(const RunConfig &config);
CommandOutput cmd_reconstruct(const RunConfig &config);
CommandOutput cmd_sweep(const RunConfig &config);

/// Path that receives the estimated probabilities next to `out`:
/// "probs.csv" -> "probs.sampled.csv".
std::string sampled_sibling_path(const std::string &out);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace dwm::cli

#endif
