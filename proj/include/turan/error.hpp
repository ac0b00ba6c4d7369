#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace turan {

enum class ErrorCode {
    NotPrime,
    TooLarge,
    ZeroInput,
    DegenerateInput,
    NotDivisor,
    UnknownName,
    BadParameter,
    SameVertex,
    ImproperColoring,
    PatternTooDense,
    ParseError,
};

inline std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::NotDivisor: return "NotDivisor";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::ImproperColoring: return "ImproperColoring";
    case ErrorCode::PatternTooDense: return "PatternTooDense";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it to a structured diagnostic.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace turan
