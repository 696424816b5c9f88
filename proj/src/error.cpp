#include "modform/error.hpp"

namespace modform {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::NonIntegralOffset: return "NonIntegralOffset";
    case ErrorCode::CannotExtend: return "CannotExtend";
    case ErrorCode::OddWeight: return "OddWeight";
    case ErrorCode::NotInM: return "NotInM";
    case ErrorCode::AmbiguousTruncation: return "AmbiguousTruncation";
    case ErrorCode::InsufficientTruncation: return "InsufficientTruncation";
    case ErrorCode::SingularSampleMatrix: return "SingularSampleMatrix";
    case ErrorCode::NotARoot: return "NotARoot";
    case ErrorCode::ResonantRoot: return "ResonantRoot";
    case ErrorCode::RootsOutOfRange: return "RootsOutOfRange";
    case ErrorCode::RootsNotDistinct: return "RootsNotDistinct";
    case ErrorCode::IrrationalRoots: return "IrrationalRoots";
    case ErrorCode::NonIntegralWeight: return "NonIntegralWeight";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotIndecomposable: return "NotIndecomposable";
    case ErrorCode::DependentGenerators: return "DependentGenerators";
  }
  return "Unknown";
}

}  // namespace modform
