#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace monocurve {

enum class ErrorKind {
  InvalidArgument,
  NotNumerical,
  Degenerate,
  InvalidModulus,
  NotCoprime,
  PIsGenerator,
  QIsGenerator,
  Overlap,
  PNotInLeft,
  QNotInRight,
  BadCoefficients,
  NotStar,
  AmbientMismatch,
  ZeroPolynomial,
  PreconditionViolated,
  TooLarge,
  SpecMismatch,
  NotCohenMacaulay,
  InternalInconsistency,
  Overflow,
  ParseError,
  Timeout,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind so
/// callers (and the CLI exit-code mapping) can branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace monocurve
