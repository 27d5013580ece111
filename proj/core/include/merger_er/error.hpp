#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace merger_er {

enum class ErrorCode {
    InvalidProfile,
    Inadmissible,
    NegativeSynergy,
    InvalidRiskReduction,
    NotAnInterval,
    InvalidCase,
    InvalidArgument,
    ParseError,
    ValidationError,
    EncodingFailure,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for errors caused by inputs outside the admissible economic domain
/// (as opposed to malformed requests or I/O failures).
bool is_admissibility_error(ErrorCode code) noexcept;

/// Single exception type for the library. `path` names the offending field,
/// e.g. "outcome.rho_m" or "companies.a.price"; it may be empty.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string path, const std::string& message)
        : std::runtime_error(message), code_(code), path_(std::move(path)) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& path() const noexcept { return path_; }

private:
    ErrorCode code_;
    std::string path_;
};

}  // namespace merger_er
