// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace affsemi {

enum class ErrorCode {
  BasisMismatch,
  BasisError,
  ProductOutsideBasis,
  DivisionByZero,
  PrecisionLimitExceeded,
  NotRational,
  NonInvertibleSlope,
  NoFixedPoint,
  IndexOutOfRange,
  MalformedMatrix,
  DegenerateInterval,
  SlopePreconditionViolated,
  HypothesisNotSatisfied,
  NonExpandingSystem,
  InvalidArgument,
  ParseError,
  NotCertified,
};

std::string_view to_string(ErrorCode code) noexcept;

/// All failures raised by the library carry one of the codes above so that
/// callers (the CLI in particular) can map them without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), message_(what) {}

  ErrorCode code() const noexcept { return code_; }
  /// what() without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace affsemi
