#ifndef HYPERBESSEL_ERRORS_HPP
#define HYPERBESSEL_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperbessel {

enum class ErrorKind {
  OrderUnsupported,
  PoleParameter,
  ArityMismatch,
  SingularRineyWeights,
  SeriesLengthInsufficient,
  CancellationFailure,
  PrecisionInsufficient,
  DomainError,
  TailNotConverged,
  CoeffShortfall,
  NoMinimumDetected,
  InvalidArgument,
  FixtureError,
};

inline std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OrderUnsupported: return "OrderUnsupported";
    case ErrorKind::PoleParameter: return "PoleParameter";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::SingularRineyWeights: return "SingularRineyWeights";
    case ErrorKind::SeriesLengthInsufficient: return "SeriesLengthInsufficient";
    case ErrorKind::CancellationFailure: return "CancellationFailure";
    case ErrorKind::PrecisionInsufficient: return "PrecisionInsufficient";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::TailNotConverged: return "TailNotConverged";
    case ErrorKind::CoeffShortfall: return "CoeffShortfall";
    case ErrorKind::NoMinimumDetected: return "NoMinimumDetected";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::FixtureError: return "FixtureError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI) can report it by name.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace hyperbessel

#endif  // HYPERBESSEL_ERRORS_HPP
