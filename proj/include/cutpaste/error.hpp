#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cutpaste {

enum class ErrorKind {
  NonSymmetric,
  NotClosed,
  NotOrientable,
  OddEulerCharacteristic,
  DimensionMismatch,
  WrongDimension,
  DegeneratePairing,
  InvalidSpec,
  InvalidMatching,
  SyntaxError,
  ArityMismatch,
  InternalInvariantViolation,
  VariantMismatch,
  NotInKernel,
  LabelMismatch,
  MissingBSigma,
  MissingAttribute,
  FractionalExponent,
  UnsupportedDimension,
  OddParity,
  FormatError,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for every failure the library reports; callers
// dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), message_(message) {}

  ErrorKind kind() const noexcept { return kind_; }
  // The message without the kind prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonSymmetric: return "NonSymmetric";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotOrientable: return "NotOrientable";
    case ErrorKind::OddEulerCharacteristic: return "OddEulerCharacteristic";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::WrongDimension: return "WrongDimension";
    case ErrorKind::DegeneratePairing: return "DegeneratePairing";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::InvalidMatching: return "InvalidMatching";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorKind::VariantMismatch: return "VariantMismatch";
    case ErrorKind::NotInKernel: return "NotInKernel";
    case ErrorKind::LabelMismatch: return "LabelMismatch";
    case ErrorKind::MissingBSigma: return "MissingBSigma";
    case ErrorKind::MissingAttribute: return "MissingAttribute";
    case ErrorKind::FractionalExponent: return "FractionalExponent";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::OddParity: return "OddParity";
    case ErrorKind::FormatError: return "FormatError";
  }
  return "Unknown";
}

}  // namespace cutpaste
