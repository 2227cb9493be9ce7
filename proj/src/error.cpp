#include "monocurve/error.hpp"

namespace monocurve {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotNumerical: return "NotNumerical";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::InvalidModulus: return "InvalidModulus";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::PIsGenerator: return "PIsGenerator";
    case ErrorKind::QIsGenerator: return "QIsGenerator";
    case ErrorKind::Overlap: return "Overlap";
    case ErrorKind::PNotInLeft: return "PNotInLeft";
    case ErrorKind::QNotInRight: return "QNotInRight";
    case ErrorKind::BadCoefficients: return "BadCoefficients";
    case ErrorKind::NotStar: return "NotStar";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::NotCohenMacaulay: return "NotCohenMacaulay";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Timeout: return "Timeout";
  }
  return "Unknown";
}

}  // namespace monocurve
