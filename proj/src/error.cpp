#include "driftkl/error.hpp"

namespace driftkl {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotABijection: return "NotABijection";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::RankTooLarge: return "RankTooLarge";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::NotCovexillary: return "NotCovexillary";
    case ErrorKind::InternalGeometry: return "InternalGeometry";
    case ErrorKind::EmptyShape: return "EmptyShape";
    case ErrorKind::BoxOutOfGrid: return "BoxOutOfGrid";
    case ErrorKind::AmbiguousMaximum: return "AmbiguousMaximum";
    case ErrorKind::FlagMismatch: return "FlagMismatch";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
    case ErrorKind::NonTermination: return "NonTermination";
    case ErrorKind::InternalHalfPower: return "InternalHalfPower";
    case ErrorKind::NotStrictlyBelow: return "NotStrictlyBelow";
    case ErrorKind::NotBelow: return "NotBelow";
    case ErrorKind::NegativeExponent: return "NegativeExponent";
    case ErrorKind::ClassificationMismatch: return "ClassificationMismatch";
    case ErrorKind::NoSuchVertex: return "NoSuchVertex";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace driftkl
