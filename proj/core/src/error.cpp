#include "poincare/error.hpp"

namespace poincare {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::InvalidShape: return "InvalidShape";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorKind::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::WeightMismatch: return "WeightMismatch";
    case ErrorKind::NonIntegralDimension: return "NonIntegralDimension";
    case ErrorKind::NegativeDimension: return "NegativeDimension";
    case ErrorKind::MismatchedParameter: return "MismatchedParameter";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
  }
  return "Unknown";
}

}  // namespace poincare
