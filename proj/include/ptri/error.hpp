/*
   Copyright 2026 The ptri Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PTRI_ERROR_HPP
#define PTRI_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ptri {

enum class ErrorCode {
    NotPrime,
    EvenCharacteristic,
    BadTower,
    NoIrreducible,
    NoTower,
    OutOfRange,
    DivisionByZero,
    CtxMismatch,
    ZeroPolynomial,
    BadParams,
    ZeroParameter,
    SubfieldParameter,
    IdentityFailed,
    ConstraintViolation,
    NoValidParameter,
    BadPartPair,
    SamePart,
    BadOrder,
    InconsistentCounts,
    TooLarge,
    NotPlanar,
    BadCharacteristic,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
        case ErrorCode::BadTower: return "BadTower";
        case ErrorCode::NoIrreducible: return "NoIrreducible";
        case ErrorCode::NoTower: return "NoTower";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::CtxMismatch: return "CtxMismatch";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::BadParams: return "BadParams";
        case ErrorCode::ZeroParameter: return "ZeroParameter";
        case ErrorCode::SubfieldParameter: return "SubfieldParameter";
        case ErrorCode::IdentityFailed: return "IdentityFailed";
        case ErrorCode::ConstraintViolation: return "ConstraintViolation";
        case ErrorCode::NoValidParameter: return "NoValidParameter";
        case ErrorCode::BadPartPair: return "BadPartPair";
        case ErrorCode::SamePart: return "SamePart";
        case ErrorCode::BadOrder: return "BadOrder";
        case ErrorCode::InconsistentCounts: return "InconsistentCounts";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::NotPlanar: return "NotPlanar";
        case ErrorCode::BadCharacteristic: return "BadCharacteristic";
    }
    return "Unknown";
}

/// Every failure in the library is reported through this exception; `code()`
/// is stable and is what the CLI and tests dispatch on.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

}  // namespace ptri

#endif  // PTRI_ERROR_HPP
