#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace alcove {

enum class ErrorKind {
  NonUnimodular,
  DimensionMismatch,
  TooLarge,
  InvalidRank,
  InvalidType,
  NotIrreducible,
  NotSemisimple,
  NotAnAutomorphism,
  NotReduced,
  Unrecognized,
  CapExceeded,
  PointOutsideAlcove,
  NonTermination,
  Inconsistent,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by enumerations that stop at a configured bound.
class CapExceededError : public Error {
 public:
  CapExceededError(const std::string& what, std::size_t partial_count)
      : Error(ErrorKind::CapExceeded, what), partial_count_(partial_count) {}

  std::size_t partial_count() const noexcept { return partial_count_; }

 private:
  std::size_t partial_count_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonUnimodular: return "NonUnimodular";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidRank: return "InvalidRank";
    case ErrorKind::InvalidType: return "InvalidType";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::NotSemisimple: return "NotSemisimple";
    case ErrorKind::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::Unrecognized: return "Unrecognized";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::PointOutsideAlcove: return "PointOutsideAlcove";
    case ErrorKind::NonTermination: return "NonTermination";
    case ErrorKind::Inconsistent: return "Inconsistent";
  }
  return "Unknown";
}

}  // namespace alcove
