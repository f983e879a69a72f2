#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fermat5 {

enum class Errc {
  ZeroInput,
  InputTooSmall,
  DivisionByZero,
  DivisionByZeroPoly,
  BothZero,
  DegreeTooSmall,
  NotSquarefree,
  InvalidInterval,
  ZeroPolynomial,
  BadPrime,
  NotSquarefreeModP,
  ContextMismatch,
  NotInvertible,
  DegenerateParameter,
  SeparabilityFailure,
  PhiUndefined,
  NonRationalValue,
  ZeroConic,
  OracleDisagreement,
  PrerequisiteMissing,
  ZeroDiscriminant,
  NotTotallyReal,
  ParseError,
};

std::string_view errc_name(Errc code);

class MathError : public std::runtime_error {
 public:
  MathError(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace fermat5
