#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace driftkl {

enum class ErrorKind {
  NotABijection,
  RankMismatch,
  RankTooLarge,
  NotComparable,
  NotCovexillary,
  InternalGeometry,
  EmptyShape,
  BoxOutOfGrid,
  AmbiguousMaximum,
  FlagMismatch,
  InternalInvariant,
  NonTermination,
  InternalHalfPower,
  NotStrictlyBelow,
  NotBelow,
  NegativeExponent,
  ClassificationMismatch,
  NoSuchVertex,
  ParseError,
  Overflow,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace driftkl
