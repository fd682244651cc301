#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace poincare {

enum class ErrorKind {
  InvalidPartition,
  InvalidShape,
  InvalidArgument,
  ZeroConstantTerm,
  NonUnitConstantTerm,
  InsufficientPrecision,
  IndexOutOfRange,
  WeightMismatch,
  NonIntegralDimension,
  NegativeDimension,
  MismatchedParameter,
  InvalidSpec,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Domain error raised by every library operation. The kind is stable and is
// what the CLI reports; the message is for humans.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace poincare
