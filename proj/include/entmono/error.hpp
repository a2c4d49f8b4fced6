#pragma once

#include <stdexcept>
#include <string>

namespace entmono {

enum class ErrorKind {
  NegativeEntry,
  NotNormalizable,
  DimMismatch,
  RankDeficientReference,
  NotStochastic,
  AlphaOutOfRange,
  StepOutOfRange,
  NegativeRoot,
  NonpositiveX,
  DegenerateDenominator,
  SearchBudgetExceeded,
  BlockTooLarge,
  NoConvergence,
  UnsupportedCombination,
  DomainError,
  QuadratureNoConvergence,
  NoSignChange,
  BudgetExceeded,
  IoError,
  ParseError,
  InvalidArgument,
};

const char* to_string(ErrorKind kind) noexcept;

// Numeric failures (as opposed to bad input) map to a distinct CLI exit code.
bool is_numeric_failure(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace entmono
