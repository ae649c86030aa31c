#include "gapvogel/errors.hpp"

namespace gapvogel {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UnknownVariable: return "UnknownVariable";
        case ErrorCode::ContextMismatch: return "ContextMismatch";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::DecompositionIncomplete: return "DecompositionIncomplete";
        case ErrorCode::SliceFailure: return "SliceFailure";
        case ErrorCode::ImproperIntersection: return "ImproperIntersection";
        case ErrorCode::CorrectDimensionViolated: return "CorrectDimensionViolated";
        case ErrorCode::ReorganizationBudgetExhausted: return "ReorganizationBudgetExhausted";
        case ErrorCode::NonRationalPoint: return "NonRationalPoint";
        case ErrorCode::FiberDegreeDisagreement: return "FiberDegreeDisagreement";
        case ErrorCode::PreconditionFailed: return "PreconditionFailed";
        case ErrorCode::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

}  // namespace gapvogel
