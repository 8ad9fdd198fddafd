#pragma once

#include <stdexcept>
#include <string>

namespace tamed {

enum class ErrorCode {
  DimensionMismatch,
  ArityMismatch,
  DegreeMismatch,
  NotSolvable,
  NotNilpotent,
  ThetaNotClosed,
  ThetaZero,
  JSquaredNotMinusId,
  NotIntegrable,
  NotNilpotentImage,
  TypeIInput,
  SpanFailure,
  NotAComplement,
  NotAlmostAbelian,
  JNotAbelian,
  NotUnimodular,
  ZeroParameter,
  NotAssociative,
  NotCommutative,
  ParseError,
  JacobiViolation,
  MissingJ,
  UnknownEntry,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tamed
