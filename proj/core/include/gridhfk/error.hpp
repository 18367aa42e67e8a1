#pragma once

#include <stdexcept>
#include <string>

namespace gridhfk {

enum class ErrorCode {
    NotAPermutation,
    SharedCell,
    MultiComponentLink,
    ParseError,
    IllegalMove,
    UnknownName,
    EvenN,
    AsymmetricPolynomial,
    SizeBoundExceeded,
    MemoryBudgetExceeded,
    InexactDivision,
    InexactFactorization,
    InconsistentSlices,
    NotACycle,
    BigradingMismatch,
    ChainMapViolation,
    GradingMismatch,
    NotInImage,
};

const char* error_name(ErrorCode code);

// 2 = bad input, 3 = resource bound, 4 = internal consistency failure
int exit_code(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace gridhfk
