/*
   Copyright 2026 The secretgame Authors

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

#ifndef SECRETGAME_ERROR_HPP
#define SECRETGAME_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace secretgame {

enum class ErrorCode {
    DimensionMismatch,
    NonPositiveEntry,
    GameOver,
    CandidateLimitExceeded,
    InconsistentResponses,
    NoCollisionInDimensionOne,
    InvalidDigit,
    EmptyTranscript,
    SessionNotFound,
    HintUnavailable,
    UniverseTooLarge,
    MalformedRequest,
    InvariantViolation,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NonPositiveEntry: return "NonPositiveEntry";
        case ErrorCode::GameOver: return "GameOver";
        case ErrorCode::CandidateLimitExceeded: return "CandidateLimitExceeded";
        case ErrorCode::InconsistentResponses: return "InconsistentResponses";
        case ErrorCode::NoCollisionInDimensionOne: return "NoCollisionInDimensionOne";
        case ErrorCode::InvalidDigit: return "InvalidDigit";
        case ErrorCode::EmptyTranscript: return "EmptyTranscript";
        case ErrorCode::SessionNotFound: return "SessionNotFound";
        case ErrorCode::HintUnavailable: return "HintUnavailable";
        case ErrorCode::UniverseTooLarge: return "UniverseTooLarge";
        case ErrorCode::MalformedRequest: return "MalformedRequest";
        case ErrorCode::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// service maps them onto HTTP statuses and the CLI onto exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace secretgame

#endif  // SECRETGAME_ERROR_HPP
