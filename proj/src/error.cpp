#include "sepset/error.hpp"

namespace sepset {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::MissingEntry: return "MissingEntry";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::CarrierMismatch: return "CarrierMismatch";
    case ErrorCode::CarrierTooLarge: return "CarrierTooLarge";
    case ErrorCode::NotInjective: return "NotInjective";
    case ErrorCode::NotASubfamily: return "NotASubfamily";
    case ErrorCode::NotAMetric: return "NotAMetric";
    case ErrorCode::MissingTransport: return "MissingTransport";
    case ErrorCode::IndexNotDiscrete: return "IndexNotDiscrete";
    case ErrorCode::NotInPiSet: return "NotInPiSet";
    case ErrorCode::NotAffine: return "NotAffine";
    case ErrorCode::NotCompatible: return "NotCompatible";
    case ErrorCode::EmptyValueUniverse: return "EmptyValueUniverse";
    case ErrorCode::MalformedRational: return "MalformedRational";
    case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UndeclaredName: return "UndeclaredName";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::UnknownLawId: return "UnknownLawId";
  }
  return "Unknown";
}

}  // namespace sepset
