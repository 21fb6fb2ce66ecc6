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

#include "dwm/errors.h"

namespace dwm {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ZeroVector:
            return "ZeroVector";
        case ErrorCode::DimensionTooSmall:
            return "DimensionTooSmall";
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::IndexOutOfRange:
            return "IndexOutOfRange";
        case ErrorCode::UnknownLabel:
            return "UnknownLabel";
        case ErrorCode::InvalidAngle:
            return "InvalidAngle";
        case ErrorCode::ZeroPostSelection:
            return "ZeroPostSelection";
        case ErrorCode::DegenerateAngle:
            return "DegenerateAngle";
        case ErrorCode::VanishingTildePsi:
            return "VanishingTildePsi";
        case ErrorCode::InvalidDistribution:
            return "InvalidDistribution";
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
        case ErrorCode::Config:
            return "ConfigError";
        case ErrorCode::Io:
            return "IoError";
    }
    return "Unknown";
}

bool is_protocol_degenerate(ErrorCode code) {
    return code == ErrorCode::DegenerateAngle || code == ErrorCode::VanishingTildePsi ||
           code == ErrorCode::ZeroPostSelection;
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

}  // namespace dwm
