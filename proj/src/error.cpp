#include "ttw/error.hpp"

namespace ttw {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::InvalidDecomposition: return "InvalidDecomposition";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::BadVertexId: return "BadVertexId";
    case ErrorCode::EmptyEdge: return "EmptyEdge";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::ValueOutOfDomain: return "ValueOutOfDomain";
    case ErrorCode::DuplicateScope: return "DuplicateScope";
    case ErrorCode::Uncoverable: return "Uncoverable";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::InfeasibleBound: return "InfeasibleBound";
    case ErrorCode::SolverTimeout: return "SolverTimeout";
    case ErrorCode::SolverCrash: return "SolverCrash";
    case ErrorCode::DecompositionMismatch: return "DecompositionMismatch";
    case ErrorCode::DomainThresholdMismatch: return "DomainThresholdMismatch";
    case ErrorCode::CoverConstraintMissing: return "CoverConstraintMissing";
    case ErrorCode::ScaleExceeded: return "ScaleExceeded";
    case ErrorCode::Inconclusive: return "Inconclusive";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

ParseError::ParseError(ErrorCode code, std::size_t line, std::size_t column, const std::string& what)
    : Error(code, "line " + std::to_string(line) +
                      (column ? ", column " + std::to_string(column) : std::string()) + ": " + what),
      line_(line),
      column_(column) {}

}  // namespace ttw
