#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tempus {

/// Failure categories. The CLI prints the category name as the
/// machine-readable part of its error message.
enum class ErrorKind {
  NonHermitianInput,
  DimensionMismatch,
  NotNormalized,
  NotADensityMatrix,
  NotAProbabilityVector,
  NonPositiveTime,
  InsufficientSamples,
  IndexOutOfRange,
  OutOfRange,
  ZeroWidth,
  NotBracketed,
  NonPositiveInputs,
  NonPositiveMass,
  MissingField,
  DimensionTooLarge,
  InvalidConfig,
  InvariantViolation,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tempus
