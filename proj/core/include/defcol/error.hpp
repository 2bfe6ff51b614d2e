#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace defcol {

enum class ErrorCode {
  AsymmetricAdjacency,
  DuplicateNeighbor,
  SelfLoop,
  UnknownVertex,
  Disconnected,
  NoEmbedding,
  NotPlanar,
  MalformedInput,
  BudgetExceeded,
  InvalidParam,
  PartialColoring,
  ClassOutOfRange,
  CycleRestrictionViolated,
  GroupingConflict,
  ContainsC4,
  IrreducibleGraph,
  ExtensionWitnessMissing,
  InvariantViolated,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base exception for every failure the library reports. The code is the
/// stable, machine-readable part; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Input-format failure with a 1-based source position (0 means unknown).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace defcol
