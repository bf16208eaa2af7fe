#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kerr {

enum class ErrorKind {
  InvalidArgument,
  GridTooSmall,
  NegativeEnergy,
  GridMismatch,
  NonConvergence,
  ZeroEnergy,
  NoBracket,
  NoCrossing,
  EmptySpan,
  NoCoincidences,
  ZeroNoise,
  DegenerateBins,
  ParseError,
  ValidationError,
  IoError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (and the
/// CLI exit-code mapping) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::GridTooSmall: return "GridTooSmall";
    case ErrorKind::NegativeEnergy: return "NegativeEnergy";
    case ErrorKind::GridMismatch: return "GridMismatch";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::ZeroEnergy: return "ZeroEnergy";
    case ErrorKind::NoBracket: return "NoBracket";
    case ErrorKind::NoCrossing: return "NoCrossing";
    case ErrorKind::EmptySpan: return "EmptySpan";
    case ErrorKind::NoCoincidences: return "NoCoincidences";
    case ErrorKind::ZeroNoise: return "ZeroNoise";
    case ErrorKind::DegenerateBins: return "DegenerateBins";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace kerr
