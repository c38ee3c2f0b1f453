#include "mediator/errors.hpp"

#include <algorithm>

namespace mediator {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownState: return "UnknownState";
    case ErrorKind::UnknownPlayer: return "UnknownPlayer";
    case ErrorKind::UnknownSignal: return "UnknownSignal";
    case ErrorKind::SignalHasZeroProbability: return "SignalHasZeroProbability";
    case ErrorKind::NotSameComponent: return "NotSameComponent";
    case ErrorKind::NotAComponent: return "NotAComponent";
    case ErrorKind::EmptySubgroup: return "EmptySubgroup";
    case ErrorKind::MalformedCertificate: return "MalformedCertificate";
    case ErrorKind::ReciprocityViolation: return "ReciprocityViolation";
    case ErrorKind::AntisymmetryViolation: return "AntisymmetryViolation";
    case ErrorKind::InvalidLabel: return "InvalidLabel";
    case ErrorKind::InvalidFamily: return "InvalidFamily";
    case ErrorKind::InvalidGame: return "InvalidGame";
  }
  return "Unknown";
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::DuplicateState: return "DuplicateState";
    case ViolationKind::UnknownState: return "UnknownState";
    case ViolationKind::EmptyCell: return "EmptyCell";
    case ViolationKind::OverlappingCells: return "OverlappingCells";
    case ViolationKind::UncoveredState: return "UncoveredState";
    case ViolationKind::MissingPrior: return "MissingPrior";
    case ViolationKind::ZeroOrNegativePrior: return "ZeroOrNegativePrior";
    case ViolationKind::PriorNotNormalized: return "PriorNotNormalized";
    case ViolationKind::FewerThanTwoPlayers: return "FewerThanTwoPlayers";
    case ViolationKind::DuplicatePlayer: return "DuplicatePlayer";
    case ViolationKind::UnknownPlayer: return "UnknownPlayer";
    case ViolationKind::MissingEntry: return "MissingEntry";
    case ViolationKind::NegativeProbability: return "NegativeProbability";
    case ViolationKind::SupportOutsideCell: return "SupportOutsideCell";
    case ViolationKind::NotNormalized: return "NotNormalized";
    case ViolationKind::ConditionIViolated: return "ConditionIViolated";
    case ViolationKind::ConditionIIViolated: return "ConditionIIViolated";
    case ViolationKind::CellInconsistent: return "CellInconsistent";
    case ViolationKind::UnknownSignal: return "UnknownSignal";
    case ViolationKind::DuplicateSignal: return "DuplicateSignal";
    case ViolationKind::NegativeKernelEntry: return "NegativeKernelEntry";
    case ViolationKind::RowNotStochastic: return "RowNotStochastic";
    case ViolationKind::NotFMeasurable: return "NotFMeasurable";
  }
  return "Unknown";
}

namespace {

std::string summarize(const std::vector<Violation>& violations) {
  std::string text = "validation failed";
  for (const auto& v : violations) {
    text += "\n  ";
    text += to_string(v.kind);
    text += ": ";
    text += v.message;
  }
  return text;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::runtime_error(summarize(violations)), violations_(std::move(violations)) {}

bool ValidationError::has(ViolationKind kind) const {
  return std::any_of(violations_.begin(), violations_.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

}  // namespace mediator
