#pragma once

#include <stdexcept>
#include <string>

namespace hyperu {

enum class ErrorCode {
    invalid_argument,
    genus_mismatch,
    too_large,
    numerical_degeneracy,
    truncation_failure,
    internal,
};

inline const char *to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::genus_mismatch: return "genus_mismatch";
    case ErrorCode::too_large: return "too_large";
    case ErrorCode::numerical_degeneracy: return "numerical_degeneracy";
    case ErrorCode::truncation_failure: return "truncation_failure";
    case ErrorCode::internal: return "internal";
    }
    return "unknown";
}

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto a structured error record.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string &detail)
        : std::runtime_error(detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline void require(bool cond, ErrorCode code, const std::string &detail)
{
    if (!cond)
        throw Error(code, detail);
}

inline void require_same_genus(int a, int b)
{
    if (a != b)
        throw Error(ErrorCode::genus_mismatch,
                    "genus mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

} // namespace hyperu
