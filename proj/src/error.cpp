#include "rwind/error.hpp"

namespace rwind {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NonUnimodular: return "NonUnimodular";
    case ErrorKind::NonPositiveModulus: return "NonPositiveModulus";
    case ErrorKind::NumericalAmbiguity: return "NumericalAmbiguity";
    case ErrorKind::NotHyperbolic: return "NotHyperbolic";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::OddLength: return "OddLength";
    case ErrorKind::NonPositiveEntry: return "NonPositiveEntry";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NonIntegralPhi: return "NonIntegralPhi";
    case ErrorKind::NonPositiveImaginary: return "NonPositiveImaginary";
    case ErrorKind::StepTooCoarse: return "StepTooCoarse";
    case ErrorKind::ResidualTooLarge: return "ResidualTooLarge";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace rwind
