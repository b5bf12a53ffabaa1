#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sqdist {

enum class ErrorCode {
    EmptyInput,
    PartCountBelowTwo,
    NonPositivePart,
    MismatchedTotals,
    MismatchedLength,
    NotMajorized,
    Identical,
    InfeasibleParameters,
    DisconnectedGraph,
    NoSingletonParts,
    NotApplicable,
    BracketFailure,
    NoConvergence,
    ParseError,
};

std::string_view to_string(ErrorCode code);

/// Domain error carrying a machine-readable code. The message names the
/// violated precondition.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace sqdist
