#include "gml/errors.hpp"

namespace gml {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroDenominatorExponent: return "ZeroDenominatorExponent";
    case ErrorKind::NonRealInput: return "NonRealInput";
    case ErrorKind::PoleAtEvaluationPoint: return "PoleAtEvaluationPoint";
    case ErrorKind::DivergentSeries: return "DivergentSeries";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::InconsistentRepresentation: return "InconsistentRepresentation";
    case ErrorKind::NotTame: return "NotTame";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::MalformedStrata: return "MalformedStrata";
    case ErrorKind::InfiniteInput: return "InfiniteInput";
    case ErrorKind::InfiniteMass: return "InfiniteMass";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Precondition: return "Precondition";
  }
  return "Unknown";
}

}  // namespace gml
