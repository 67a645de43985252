#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace btq {

enum class ErrorKind {
  InvalidArgument,
  DivergentIntegral,
  DegreeTooSmall,
  QuadratureNotConverged,
  NumericalFailure,
  NotParityPreserving,
  PoleOnLocus,
  BranchPinch,
  RootAtInfinity,
  WindowViolation,
  NonConvergence,
  CountMismatch,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-readable kind; the
/// CLI echoes `to_string(kind())` and maps it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// True for the kinds that signal an invalid request rather than a numerical
/// breakdown.
bool is_config_error(ErrorKind kind) noexcept;

}  // namespace btq
