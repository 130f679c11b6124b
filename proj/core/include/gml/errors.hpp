#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gml {

enum class ErrorKind {
  ZeroDenominatorExponent,
  NonRealInput,
  PoleAtEvaluationPoint,
  DivergentSeries,
  GroupTooLarge,
  InconsistentRepresentation,
  NotTame,
  InvalidParams,
  MalformedStrata,
  InfiniteInput,
  InfiniteMass,
  ParseError,
  Precondition,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// that front ends (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), message_(message) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix that what() carries.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

}  // namespace gml
