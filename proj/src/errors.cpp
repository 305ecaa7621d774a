#include "area/errors.hpp"

namespace area {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::UnknownPoint: return "UnknownPoint";
    case ErrorKind::DuplicatePoint: return "DuplicatePoint";
    case ErrorKind::UnsupportedShape: return "UnsupportedShape";
    case ErrorKind::UnsupportedAtom: return "UnsupportedAtom";
    case ErrorKind::TooFewFreePoints: return "TooFewFreePoints";
    case ErrorKind::ResidualOddPower: return "ResidualOddPower";
    case ErrorKind::ConstructionInconsistent: return "ConstructionInconsistent";
    case ErrorKind::NonParallelRatio: return "NonParallelRatio";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DegenerateAfterRetries: return "DegenerateAfterRetries";
    case ErrorKind::SqrtOfNegative: return "SqrtOfNegative";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::TimeLimit: return "TimeLimit";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace area
