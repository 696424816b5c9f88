#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace modform {

enum class ErrorCode {
  InvalidArgument = 1,
  ParseError,
  DomainMismatch,
  NonIntegralOffset,
  CannotExtend,
  OddWeight,
  NotInM,
  AmbiguousTruncation,
  InsufficientTruncation,
  SingularSampleMatrix,
  NotARoot,
  ResonantRoot,
  RootsOutOfRange,
  RootsNotDistinct,
  IrrationalRoots,
  NonIntegralWeight,
  OrderTooLarge,
  OutOfRange,
  NotIndecomposable,
  DependentGenerators,
};

/// Stable name used in structured error output ("NonIntegralOffset", ...).
std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace modform
