#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace apparent {

/// Stable error codes. The CLI prints `code_name()` verbatim, so renaming an
/// enumerator is a breaking change for scripts that match on it.
enum class ErrorCode {
  InvalidArgument,
  ParseError,
  DivisionByZero,
  // polyrat
  BothZero,
  ZeroPolynomial,
  // odemodel
  NotAnODE,
  DegenerateLeading,
  SingularMoebius,
  NotFuchsian,
  // frobenius
  IrregularPoint,
  NotAnExponent,
  NotSingular,
  // transform
  AlreadyIntegrated,
  NothingToRemove,
  NotRemovable,
  MultiplicityRequired,
  // heun
  FuchsianIdentity,
  DegenerateGeometry,
  NotConfluentClass,
  // polymer
  DegenerateApparentPoint,
  NoEigenvalueInWindow,
  PrecisionExhausted,
};

std::string_view code_name(ErrorCode code) noexcept;

/// Every code, in declaration order.
const std::vector<ErrorCode>& all_error_codes();

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace apparent
