#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fanplanar {

enum class ErrorKind {
  InconsistentSpec,
  SimplicityViolation,
  UnknownEdge,
  UnknownVertex,
  PreconditionViolated,
  NotCrossing,
  InvalidHeart,
  InvalidRoute,
  SurgeryFailed,
  FixtureCorrupt,
  CompositionFailed,
  BudgetTooLarge,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// All recoverable failures of the library carry one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fanplanar
