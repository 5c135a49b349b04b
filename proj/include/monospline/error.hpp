#pragma once

#include <stdexcept>
#include <string>

namespace monospline {

enum class ErrorCode {
    TooFewPoints,
    NonIncreasingAbscissae,
    LengthMismatch,
    OutOfDomain,
    NotInterior,
    SingularPivot,
    FixedAtBoundary,
    EmptyWindow,
    ZeroError,
    InvalidValue,
    Parse,
};

inline const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::NonIncreasingAbscissae: return "NonIncreasingAbscissae";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::NotInterior: return "NotInterior";
    case ErrorCode::SingularPivot: return "SingularPivot";
    case ErrorCode::FixedAtBoundary: return "FixedAtBoundary";
    case ErrorCode::EmptyWindow: return "EmptyWindow";
    case ErrorCode::ZeroError: return "ZeroError";
    case ErrorCode::InvalidValue: return "InvalidValue";
    case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace monospline
