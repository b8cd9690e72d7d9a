#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace montyhall {

enum class ErrorCode {
    TooFewDoors,
    DoorOutOfRange,
    NegativeProbability,
    SumNotOne,
    NotSquare,
    NonzeroDiagonal,
    RowSumNotOne,
    InvalidDecision,
    DimensionMismatch,
    SameDoor,
    SizeLimit,
    Precondition,
    NoConvergence,
    NoSamples,
    ParseError,
    ValidationError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::TooFewDoors: return "TOO_FEW_DOORS";
        case ErrorCode::DoorOutOfRange: return "DOOR_OUT_OF_RANGE";
        case ErrorCode::NegativeProbability: return "NEGATIVE_PROBABILITY";
        case ErrorCode::SumNotOne: return "SUM_NOT_ONE";
        case ErrorCode::NotSquare: return "NOT_SQUARE";
        case ErrorCode::NonzeroDiagonal: return "NONZERO_DIAGONAL";
        case ErrorCode::RowSumNotOne: return "ROW_SUM_NOT_ONE";
        case ErrorCode::InvalidDecision: return "INVALID_DECISION";
        case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
        case ErrorCode::SameDoor: return "SAME_DOOR";
        case ErrorCode::SizeLimit: return "SIZE_LIMIT";
        case ErrorCode::Precondition: return "PRECONDITION";
        case ErrorCode::NoConvergence: return "NO_CONVERGENCE";
        case ErrorCode::NoSamples: return "NO_SAMPLES";
        case ErrorCode::ParseError: return "PARSE_ERROR";
        case ErrorCode::ValidationError: return "VALIDATION_ERROR";
    }
    return "UNKNOWN";
}

/// Every failure in the library is reported as an Error carrying a machine
/// readable code. `path` names the offending field (e.g. "p", "q[2]") when
/// the failure comes from validating user input, and is empty otherwise.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::string path = {})
        : std::runtime_error(std::string(to_string(code)) + ": " + message),
          code_(code),
          path_(std::move(path)) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }
    [[nodiscard]] const std::string& path() const noexcept { return path_; }

private:
    ErrorCode code_;
    std::string path_;
};

}  // namespace montyhall
