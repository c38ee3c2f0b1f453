#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mediator {

enum class ErrorKind {
  UnknownState,
  UnknownPlayer,
  UnknownSignal,
  SignalHasZeroProbability,
  NotSameComponent,
  NotAComponent,
  EmptySubgroup,
  MalformedCertificate,
  ReciprocityViolation,
  AntisymmetryViolation,
  InvalidLabel,
  InvalidFamily,
  InvalidGame,
};

std::string_view to_string(ErrorKind kind);

// Operational error raised by library functions when a precondition fails.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

enum class ViolationKind {
  // model
  DuplicateState,
  UnknownState,
  EmptyCell,
  OverlappingCells,
  UncoveredState,
  MissingPrior,
  ZeroOrNegativePrior,
  PriorNotNormalized,
  FewerThanTwoPlayers,
  DuplicatePlayer,
  // joint belief
  UnknownPlayer,
  MissingEntry,
  NegativeProbability,
  SupportOutsideCell,
  NotNormalized,
  ConditionIViolated,
  ConditionIIViolated,
  CellInconsistent,
  // signal kernel
  UnknownSignal,
  DuplicateSignal,
  NegativeKernelEntry,
  RowNotStochastic,
  NotFMeasurable,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string message;
};

// Structural validation failure carrying every violation found.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }
  bool has(ViolationKind kind) const;

 private:
  std::vector<Violation> violations_;
};

}  // namespace mediator
