#include "apparent/error.hpp"

namespace apparent {

std::string_view code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotAnODE: return "NotAnODE";
    case ErrorCode::DegenerateLeading: return "DegenerateLeading";
    case ErrorCode::SingularMoebius: return "SingularMoebius";
    case ErrorCode::NotFuchsian: return "NotFuchsian";
    case ErrorCode::IrregularPoint: return "IrregularPoint";
    case ErrorCode::NotAnExponent: return "NotAnExponent";
    case ErrorCode::NotSingular: return "NotSingular";
    case ErrorCode::AlreadyIntegrated: return "AlreadyIntegrated";
    case ErrorCode::NothingToRemove: return "NothingToRemove";
    case ErrorCode::NotRemovable: return "NotRemovable";
    case ErrorCode::MultiplicityRequired: return "MultiplicityRequired";
    case ErrorCode::FuchsianIdentity: return "FuchsianIdentity";
    case ErrorCode::DegenerateGeometry: return "DegenerateGeometry";
    case ErrorCode::NotConfluentClass: return "NotConfluentClass";
    case ErrorCode::DegenerateApparentPoint: return "DegenerateApparentPoint";
    case ErrorCode::NoEigenvalueInWindow: return "NoEigenvalueInWindow";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
  }
  return "Unknown";
}

const std::vector<ErrorCode>& all_error_codes() {
  static const std::vector<ErrorCode> codes = {
      ErrorCode::InvalidArgument,   ErrorCode::ParseError,           ErrorCode::DivisionByZero,
      ErrorCode::BothZero,          ErrorCode::ZeroPolynomial,       ErrorCode::NotAnODE,
      ErrorCode::DegenerateLeading, ErrorCode::SingularMoebius,      ErrorCode::NotFuchsian,
      ErrorCode::IrregularPoint,    ErrorCode::NotAnExponent,        ErrorCode::NotSingular,
      ErrorCode::AlreadyIntegrated, ErrorCode::NothingToRemove,      ErrorCode::NotRemovable,
      ErrorCode::MultiplicityRequired, ErrorCode::FuchsianIdentity,  ErrorCode::DegenerateGeometry,
      ErrorCode::NotConfluentClass, ErrorCode::DegenerateApparentPoint, ErrorCode::NoEigenvalueInWindow,
      ErrorCode::PrecisionExhausted,
  };
  return codes;
}

}  // namespace apparent
