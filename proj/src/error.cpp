#include "entmono/error.hpp"

namespace entmono {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::NotNormalizable: return "NotNormalizable";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::RankDeficientReference: return "RankDeficientReference";
    case ErrorKind::NotStochastic: return "NotStochastic";
    case ErrorKind::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorKind::StepOutOfRange: return "StepOutOfRange";
    case ErrorKind::NegativeRoot: return "NegativeRoot";
    case ErrorKind::NonpositiveX: return "NonpositiveX";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::BlockTooLarge: return "BlockTooLarge";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::UnsupportedCombination: return "UnsupportedCombination";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::QuadratureNoConvergence: return "QuadratureNoConvergence";
    case ErrorKind::NoSignChange: return "NoSignChange";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_numeric_failure(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DegenerateDenominator:
    case ErrorKind::SearchBudgetExceeded:
    case ErrorKind::NoConvergence:
    case ErrorKind::QuadratureNoConvergence:
    case ErrorKind::NoSignChange:
      return true;
    default:
      return false;
  }
}

}  // namespace entmono
