#pragma once

#include <stdexcept>
#include <string>

namespace qhyp {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  InvalidField,
  InvalidArgument,
  UnsupportedDyadic,
  NotARealPlace,
  NotRamifiedAtPlace,
  SquareElement,
  SubfieldDoesNotEmbed,
  AlgebraMismatch,
  DimensionMismatch,
  NotQuaternionicHyperbolic,
  SignaturePrecondition,
  UnsupportedRank,
  NonNegativeVector,
  PointAtInfinity,
  SearchExhausted,
};

const char* to_string(ErrorCode code) noexcept;

/// Every library failure carries a code so callers can branch without
/// parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qhyp
