#include "gridhfk/error.hpp"

namespace gridhfk {

const char* error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotAPermutation: return "NotAPermutation";
        case ErrorCode::SharedCell: return "SharedCell";
        case ErrorCode::MultiComponentLink: return "MultiComponentLink";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IllegalMove: return "IllegalMove";
        case ErrorCode::UnknownName: return "UnknownName";
        case ErrorCode::EvenN: return "EvenN";
        case ErrorCode::AsymmetricPolynomial: return "AsymmetricPolynomial";
        case ErrorCode::SizeBoundExceeded: return "SizeBoundExceeded";
        case ErrorCode::MemoryBudgetExceeded: return "MemoryBudgetExceeded";
        case ErrorCode::InexactDivision: return "InexactDivision";
        case ErrorCode::InexactFactorization: return "InexactFactorization";
        case ErrorCode::InconsistentSlices: return "InconsistentSlices";
        case ErrorCode::NotACycle: return "NotACycle";
        case ErrorCode::BigradingMismatch: return "BigradingMismatch";
        case ErrorCode::ChainMapViolation: return "ChainMapViolation";
        case ErrorCode::GradingMismatch: return "GradingMismatch";
        case ErrorCode::NotInImage: return "NotInImage";
    }
    return "UnknownError";
}

int exit_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotAPermutation:
        case ErrorCode::SharedCell:
        case ErrorCode::MultiComponentLink:
        case ErrorCode::ParseError:
        case ErrorCode::IllegalMove:
        case ErrorCode::UnknownName:
        case ErrorCode::EvenN:
        case ErrorCode::AsymmetricPolynomial:
        case ErrorCode::BigradingMismatch:
            return 2;
        case ErrorCode::SizeBoundExceeded:
        case ErrorCode::MemoryBudgetExceeded:
            return 3;
        default:
            return 4;
    }
}

}  // namespace gridhfk
