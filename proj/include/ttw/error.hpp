#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ttw {

enum class ErrorCode {
    InvalidArgument,
    NotAPermutation,
    InvalidDecomposition,
    SyntaxError,
    CountMismatch,
    BadVertexId,
    EmptyEdge,
    ArityMismatch,
    ValueOutOfDomain,
    DuplicateScope,
    Uncoverable,
    BudgetExhausted,
    InfeasibleBound,
    SolverTimeout,
    SolverCrash,
    DecompositionMismatch,
    DomainThresholdMismatch,
    CoverConstraintMissing,
    ScaleExceeded,
    Inconclusive,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failure with a 1-based source position. Column 0 means "whole line".
class ParseError : public Error {
public:
    ParseError(ErrorCode code, std::size_t line, std::size_t column, const std::string& what);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace ttw
