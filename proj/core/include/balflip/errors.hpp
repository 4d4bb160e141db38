#pragma once

#include <stdexcept>
#include <string>

namespace balflip {

enum class ErrorKind {
  FaceNotPresent,
  VertexCollision,
  NotPure,
  NotSubcomplex,
  NotAntichain,
  EmptyIndexSet,
  NotSubcomplexOfSimplexBoundary,
  MismatchedGamma,
  HintNotAFacet,
  HintMissing,
  InvalidSequence,
  IndexSetViolatesPrecondition,
  NotWeldable,
  NotApplicable,
  ConditionViolated,
  NotInduced,
  NotShellable,
  NotCoShellable,
  EmbeddingNotInjective,
  NotApplicableOnBoundary,
  NotAPermutation,
  BudgetExceeded,
  NotAShelling,
  DimensionCapExceeded,
  ParseError,
  BadParams,
  StepFailed,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, int condition = 0)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        condition_(condition) {}

  ErrorKind kind() const noexcept { return kind_; }
  // Set only for ConditionViolated: which of the shelling conditions (1)-(3) failed.
  int condition() const noexcept { return condition_; }

 private:
  ErrorKind kind_;
  int condition_;
};

}  // namespace balflip
