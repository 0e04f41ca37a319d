// Copyright 2026 The Majorant Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace majorant {

enum class ErrorCode {
    NotHermitian,
    NonFinite,
    TotalMismatch,
    InvalidDistribution,
    NotRankOne,
    NotUnitary,
    DimensionTooLarge,
    DimensionMismatch,
    InvalidState,
    ParameterOutOfRange,
    DegenerateProduct,
    InvalidSelection,
    Parse,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::TotalMismatch: return "TotalMismatch";
        case ErrorCode::InvalidDistribution: return "InvalidDistribution";
        case ErrorCode::NotRankOne: return "NotRankOne";
        case ErrorCode::NotUnitary: return "NotUnitary";
        case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::InvalidState: return "InvalidState";
        case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
        case ErrorCode::DegenerateProduct: return "DegenerateProduct";
        case ErrorCode::InvalidSelection: return "InvalidSelection";
        case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map them without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace majorant
