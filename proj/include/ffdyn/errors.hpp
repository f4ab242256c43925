/*
   Copyright 2026 The ffdyn Authors

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

#ifndef FFDYN_ERRORS_HPP
#define FFDYN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ffdyn {

/// Every failure mode the library can report. The CLI maps these onto
/// exit codes (usage / precondition / resource).
enum class ErrorCode {
    DivisionByZero,
    BothZero,
    ZeroElement,
    ZeroPolynomial,
    FieldMismatch,
    NotPrime,
    NonIntegralResidue,
    CharDividesDegree,
    IsotrivialOverK,
    EqualPoints,
    ConstantFieldNotFinite,
    DegreeLimitExceeded,
    InsufficientSpecializationPoints,
    ResourceLimit,
    SyntaxError,
    NotPolynomialInZ,
    DegreeTooLow,
    Internal,
};

const char* error_code_name(ErrorCode c);

/// Exception carrying a typed error code plus a human-readable message.
class DomainError : public std::runtime_error {
  public:
    DomainError(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw DomainError(code, message);
}

} // namespace ffdyn

#endif
