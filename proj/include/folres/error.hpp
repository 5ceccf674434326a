#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace folres {

enum class ErrorCode {
  // input and validation
  SyntaxError,
  UnknownVariable,
  VariableMismatch,
  InvalidInput,
  InvalidPresentation,
  NotHomogeneous,
  EulerConditionFailed,
  // algebra
  DivisionByZeroPolynomial,
  TruncationMismatch,
  OrderExceedsTruncation,
  PoleOrderOverflow,
  // geometry
  DegeneratePlane,
  NoGenericPointFound,
  UserPointRequired,
  NewtonBreakdown,
  NotOnHypersurface,
  NoTransversePlaneFound,
  ChartMissesComponent,
  // foliation and indices
  NotIntegrable,
  CofactorIdentityFailed,
  SaitoIdentityFailed,
  SaitoCoprimalityFailed,
  ComponentNotSingular,
  DegenerateLinearPart,
  MismatchedComponent,
  CheckFailed,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// True for errors caused by malformed or invalid input (CLI exit code 1).
bool is_input_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace folres
