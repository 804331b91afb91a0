#pragma once

#include <stdexcept>
#include <string>

namespace hq {

enum class ErrorCode {
  InvalidInput,
  LoopPresent,
  NotComposable,
  NotClosed,
  NotReduced,
  DecisionUnknown,
  NotWeaklyAdmissible,
  NotRegular,
  NonTransitive,
  InvalidCovering,
  InvalidGluing,
  UnknownConfiguration,
  InvalidSurface,
  NotDivisible,
  NotHomogeneous,
  ResourceLimit,
  SchemaViolation,
};

const char* error_code_name(ErrorCode code);

// All library failures are reported through this type. `detail` carries a
// machine-readable fragment (JSON text) when one is available.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string detail = {})
      : std::runtime_error(message), code_(code), detail_(std::move(detail)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message,
                              std::string detail = {}) {
  throw Error(code, message, std::move(detail));
}

}  // namespace hq
