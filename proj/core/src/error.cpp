#include "merger_er/error.hpp"

namespace merger_er {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidProfile: return "InvalidProfile";
        case ErrorCode::Inadmissible: return "Inadmissible";
        case ErrorCode::NegativeSynergy: return "NegativeSynergy";
        case ErrorCode::InvalidRiskReduction: return "InvalidRiskReduction";
        case ErrorCode::NotAnInterval: return "NotAnInterval";
        case ErrorCode::InvalidCase: return "InvalidCase";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ValidationError: return "ValidationError";
        case ErrorCode::EncodingFailure: return "EncodingFailure";
    }
    return "Unknown";
}

bool is_admissibility_error(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidProfile:
        case ErrorCode::Inadmissible:
        case ErrorCode::NegativeSynergy:
        case ErrorCode::InvalidRiskReduction:
            return true;
        default:
            return false;
    }
}

}  // namespace merger_er
