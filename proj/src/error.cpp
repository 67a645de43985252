#include "btq/error.hpp"

namespace btq {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DivergentIntegral: return "DivergentIntegral";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorKind::NumericalFailure: return "NumericalFailure";
    case ErrorKind::NotParityPreserving: return "NotParityPreserving";
    case ErrorKind::PoleOnLocus: return "PoleOnLocus";
    case ErrorKind::BranchPinch: return "BranchPinch";
    case ErrorKind::RootAtInfinity: return "RootAtInfinity";
    case ErrorKind::WindowViolation: return "WindowViolation";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::CountMismatch: return "CountMismatch";
  }
  return "Unknown";
}

bool is_config_error(ErrorKind kind) noexcept {
  return kind == ErrorKind::InvalidArgument || kind == ErrorKind::DivergentIntegral ||
         kind == ErrorKind::DegreeTooSmall;
}

}  // namespace btq
