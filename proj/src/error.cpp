#include "sqdist/error.hpp"

namespace sqdist {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::PartCountBelowTwo: return "PartCountBelowTwo";
        case ErrorCode::NonPositivePart: return "NonPositivePart";
        case ErrorCode::MismatchedTotals: return "MismatchedTotals";
        case ErrorCode::MismatchedLength: return "MismatchedLength";
        case ErrorCode::NotMajorized: return "NotMajorized";
        case ErrorCode::Identical: return "Identical";
        case ErrorCode::InfeasibleParameters: return "InfeasibleParameters";
        case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
        case ErrorCode::NoSingletonParts: return "NoSingletonParts";
        case ErrorCode::NotApplicable: return "NotApplicable";
        case ErrorCode::BracketFailure: return "BracketFailure";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace sqdist
