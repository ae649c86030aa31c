#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gapvogel {

enum class ErrorCode {
    ParseError,
    UnknownVariable,
    ContextMismatch,
    ZeroPolynomial,
    DecompositionIncomplete,
    SliceFailure,
    ImproperIntersection,
    CorrectDimensionViolated,
    ReorganizationBudgetExhausted,
    NonRationalPoint,
    FiberDegreeDisagreement,
    PreconditionFailed,
    InvalidInput,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message,
          std::vector<std::string> offending = {})
        : std::runtime_error(message), code_(code), offending_(std::move(offending)) {}

    ErrorCode code() const { return code_; }
    // Generators of the ideal the error refers to, if any.
    const std::vector<std::string>& offending_ideal() const { return offending_; }

private:
    ErrorCode code_;
    std::vector<std::string> offending_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(ErrorCode::ParseError, message + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Raised by the tower when a dimension hypothesis fails at a given level.
class CorrectDimensionViolated : public Error {
public:
    CorrectDimensionViolated(int level, const std::string& object, const std::string& detail,
                             std::vector<std::string> offending = {})
        : Error(ErrorCode::CorrectDimensionViolated, detail, std::move(offending)),
          level_(level), object_(object) {}
    int level() const { return level_; }
    const std::string& object() const { return object_; }

private:
    int level_;
    std::string object_;
};

}  // namespace gapvogel
