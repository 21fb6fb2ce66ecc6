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

#ifndef DWM_ERRORS_H
#define DWM_ERRORS_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace dwm {

enum class ErrorCode {
    ZeroVector,
    DimensionTooSmall,
    DimensionMismatch,
    IndexOutOfRange,
    UnknownLabel,
    InvalidAngle,
    ZeroPostSelection,
    DegenerateAngle,
    VanishingTildePsi,
    InvalidDistribution,
    InvalidArgument,
    Config,
    Io,
};

std::string_view error_code_name(ErrorCode code);

/// True for failures that come from the measurement protocol itself
/// (singular angle, post-selection that never succeeds, psi-tilde ~ 0),
/// as opposed to malformed input.
bool is_protocol_degenerate(ErrorCode code);

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message);

    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

}  // namespace dwm

#endif
