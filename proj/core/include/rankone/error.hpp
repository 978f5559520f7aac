#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rankone {

enum class ErrorCode {
    InvalidArgument,
    NotZeroConsistent,
    TooLarge,
    ZeroPolynomial,
    NotMonic,
    NotInClosure,
    NotCompletable,
    NotComplexCompletable,
    NotRealCompletable,
    CosetTooLarge,
    DegenerateE,
    CapExceeded,
    NonRationalCoefficient,
    NonDivisibleExponent,
    NegativeInput,
};

/// Stable machine-readable name of an error code ("NotMonic", ...).
std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace rankone
