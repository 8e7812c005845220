/**************************************************************************
 * Copyright 2026 The idealdim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace idealdim {

enum class ErrorCode {
    // finite-field
    NonPrimeCharacteristic,
    ReducibleModulus,
    FieldTooLarge,
    ZeroInversion,
    MixedFields,
    ZeroElement,
    // polynomial
    BothZero,
    ZeroPolynomial,
    // matrix
    NonSquare,
    Singular,
    DimensionMismatch,
    // group
    ClosureCapExceeded,
    BadOverride,
    InvalidGroup,
    // group-algebra / parsing
    MixedAlgebras,
    ParseError,
    UnknownGenerator,
    // ideal-dims
    UnitElement,
    NotApplicable,
    NotProjective,
    NotCoprime,
    NotAnnihilating,
    // abelian-codes
    NonAbelian,
    NotSemisimple,
    EmptyY,
    BadRootCount,
    NotIdempotent,
    // code-analysis
    EmptyBasis,
    // internal consistency
    InternalError,
};

/// Stable identifier used in CLI output and JSON error objects.
inline std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
        case ErrorCode::ReducibleModulus: return "ReducibleModulus";
        case ErrorCode::FieldTooLarge: return "FieldTooLarge";
        case ErrorCode::ZeroInversion: return "ZeroInversion";
        case ErrorCode::MixedFields: return "MixedFields";
        case ErrorCode::ZeroElement: return "ZeroElement";
        case ErrorCode::BothZero: return "BothZero";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::NonSquare: return "NonSquare";
        case ErrorCode::Singular: return "Singular";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::ClosureCapExceeded: return "ClosureCapExceeded";
        case ErrorCode::BadOverride: return "BadOverride";
        case ErrorCode::InvalidGroup: return "InvalidGroup";
        case ErrorCode::MixedAlgebras: return "MixedAlgebras";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UnknownGenerator: return "UnknownGenerator";
        case ErrorCode::UnitElement: return "UnitElement";
        case ErrorCode::NotApplicable: return "NotApplicable";
        case ErrorCode::NotProjective: return "NotProjective";
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::NotAnnihilating: return "NotAnnihilating";
        case ErrorCode::NonAbelian: return "NonAbelian";
        case ErrorCode::NotSemisimple: return "NotSemisimple";
        case ErrorCode::EmptyY: return "EmptyY";
        case ErrorCode::BadRootCount: return "BadRootCount";
        case ErrorCode::NotIdempotent: return "NotIdempotent";
        case ErrorCode::EmptyBasis: return "EmptyBasis";
        case ErrorCode::InternalError: return "InternalError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

/// Syntax errors carry the byte offset into the parsed text.
class ParseError : public Error {
   public:
    ParseError(ErrorCode code, std::size_t position, const std::string& message)
        : Error(code, message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

}  // namespace idealdim
