#include "tempus/error.hpp"

namespace tempus {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonHermitianInput: return "NonHermitianInput";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::NotADensityMatrix: return "NotADensityMatrix";
    case ErrorKind::NotAProbabilityVector: return "NotAProbabilityVector";
    case ErrorKind::NonPositiveTime: return "NonPositiveTime";
    case ErrorKind::InsufficientSamples: return "InsufficientSamples";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::ZeroWidth: return "ZeroWidth";
    case ErrorKind::NotBracketed: return "NotBracketed";
    case ErrorKind::NonPositiveInputs: return "NonPositiveInputs";
    case ErrorKind::NonPositiveMass: return "NonPositiveMass";
    case ErrorKind::MissingField: return "MissingField";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace tempus
