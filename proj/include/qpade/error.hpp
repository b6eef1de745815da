#pragma once

#include <stdexcept>
#include <string>

namespace qpade {

enum class ErrorKind {
  DivisionByZero,
  NonTerminating,
  NonUnitConstantTerm,
  InsufficientCoefficients,
  DegenerateParameters,
  KernelDimension,
  ShapeViolation,
  DegenerateTau,
  RatioSingular,
  StepSingular,
  PoleAtEvaluationPoint,
  CertificationFailed,
  InvalidInput,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qpade
