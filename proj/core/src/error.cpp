#include "defcol/error.hpp"

namespace defcol {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::AsymmetricAdjacency: return "AsymmetricAdjacency";
    case ErrorCode::DuplicateNeighbor: return "DuplicateNeighbor";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NoEmbedding: return "NoEmbedding";
    case ErrorCode::NotPlanar: return "NotPlanar";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InvalidParam: return "InvalidParam";
    case ErrorCode::PartialColoring: return "PartialColoring";
    case ErrorCode::ClassOutOfRange: return "ClassOutOfRange";
    case ErrorCode::CycleRestrictionViolated: return "CycleRestrictionViolated";
    case ErrorCode::GroupingConflict: return "GroupingConflict";
    case ErrorCode::ContainsC4: return "ContainsC4";
    case ErrorCode::IrreducibleGraph: return "IrreducibleGraph";
    case ErrorCode::ExtensionWitnessMissing: return "ExtensionWitnessMissing";
    case ErrorCode::InvariantViolated: return "InvariantViolated";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

ParseError::ParseError(const std::string& message, int line, int column)
    : Error(ErrorCode::MalformedInput,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace defcol
