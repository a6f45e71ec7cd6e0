#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbk {

enum class ErrorCode {
  ConductorMismatch,
  DimensionMismatch,
  InvalidArgument,
  CapExceeded,
  NonInvertibleGenerator,
  NonEffectiveAction,
  InternalInconsistency,
  NotSL,
  NonAbelian,
  TrivialFixedSpace,
  IdentityElement,
  NoLifts,
  OrderMismatch,
  SyntaxError,
  SemanticError,
  UnknownCommand,
  UnsupportedGeometry,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this one exception type; the
// code distinguishes input problems from arithmetic bugs.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace orbk
