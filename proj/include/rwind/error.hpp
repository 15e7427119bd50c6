#pragma once

#include <stdexcept>
#include <string>

namespace rwind {

enum class ErrorKind {
  Overflow,
  NonUnimodular,
  NonPositiveModulus,
  NumericalAmbiguity,
  NotHyperbolic,
  NotPrimitive,
  OddLength,
  NonPositiveEntry,
  CapExceeded,
  NonIntegralPhi,
  NonPositiveImaginary,
  StepTooCoarse,
  ResidualTooLarge,
  QuadratureFailure,
  InsufficientData,
  DomainError,
  ParseError,
};

const char* to_string(ErrorKind kind) noexcept;

// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace rwind
