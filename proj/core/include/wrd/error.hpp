#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wrd {

enum class ErrorCode {
  OutOfBounds,
  WallOffLattice,
  RegionIdsNotDense,
  RegionDisconnected,
  RegionShapeMismatch,
  LabelMultiplicity,
  DuplicateTerminal,
  NoLabels,
  InvalidLabel,
  DuplicateCircle,
  InvalidNumber,
  InvalidK,
  InvalidArgument,
  InvalidSolution,
  ParseError,
  UnknownField,
  MissingField,
  PreconditionFailed,
  MapInconsistent,
  UnliftFailed,
};

std::string_view to_string(ErrorCode code);

/// Thrown for malformed inputs and violated preconditions. Negative search
/// results (UNSAT, budget) and verifier rejections are values, not errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wrd
