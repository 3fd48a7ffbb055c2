#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace blowup {

enum class ErrorKind {
  DimensionMismatch,
  NotMPrimary,
  NotContained,
  InsufficientSamples,
  NotReduction,
  NotThreeGenerated,
  NegativeCoefficient,
  NotInCone,
  NegativeKernel,
  WindowTooSmall,
  InvariantViolation,
  Overflow,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind so
/// the CLI can map it to an error object and exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace blowup
