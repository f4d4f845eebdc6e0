#ifndef TORIC_ERROR_HPP
#define TORIC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace toric {

enum class ErrorCode {
    ZeroVector,
    DegenerateCone,
    NotUnimodular,
    NotCoprime,
    TooShort,
    NoPivot,
    BadInput,
    DivisionByZero,
    NoTorsionC1,
    LensMismatch,
};

inline const char* error_code_name(ErrorCode c)
{
    switch (c) {
        case ErrorCode::ZeroVector:     return "zero_vector";
        case ErrorCode::DegenerateCone: return "degenerate_cone";
        case ErrorCode::NotUnimodular:  return "not_unimodular";
        case ErrorCode::NotCoprime:     return "not_coprime";
        case ErrorCode::TooShort:       return "too_short";
        case ErrorCode::NoPivot:        return "no_pivot";
        case ErrorCode::BadInput:       return "bad_input";
        case ErrorCode::DivisionByZero: return "division_by_zero";
        case ErrorCode::NoTorsionC1:    return "no_torsion_c1";
        case ErrorCode::LensMismatch:   return "lens_mismatch";
    }
    return "unknown";
}

/**
 * Single exception type for all domain errors; carries a stable machine
 * readable code plus a human readable detail string.
 */
class ToricError : public std::runtime_error {
public:
    ToricError(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
          code_(code), detail_(detail)
    {
    }

    ErrorCode code() const { return code_; }
    const std::string& detail() const { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

} // namespace toric

#endif // TORIC_ERROR_HPP
