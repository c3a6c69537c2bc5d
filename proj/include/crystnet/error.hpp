#pragma once

#include <stdexcept>
#include <string>

namespace crystnet {

enum class ErrorCode {
  InvalidInput,
  ParseError,
  Disconnected,
  DegreeTooLow,
  DuplicateEdgeId,
  BadEndpoint,
  BadVertex,
  DimensionMismatch,
  NotFullColumnRank,
  BoundTooLarge,
  InputTooLarge,
  NotAFrame,
  NotCrystallographic,
  InexactFrame,
  NotASummand,
  RankMismatch,
  BadParameters,
  SizeTooLarge,
  ForceNotBalanced,
  ClassKillsWrongSubgroup,
  DegeneratePeriodLattice,
  NotTwoDimensional,
  NotPrimitive,
  NotSquareFree,
  SingularIplusX,
  NotInLieAlgebra,
  NotPythagorean,
  UnknownSuite,
  Internal,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace crystnet
