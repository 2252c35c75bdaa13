#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace monodromy {

enum class ErrorCode {
  NotInvolution,
  HasFixedPoint,
  NotConnected,
  NotPermutation,
  InvalidMarking,
  NotTrivalent,
  GenusNotZero,
  DegenerateIndex,
  InvalidEt,
  AlreadyStar,
  NotMultipleOf12,
  ShapeMismatch,
  DegreeTooLarge,
  InvalidProfile,
  NotCoprime,
  NoRationalPoint,
  DegenerateParameters,
  FieldMismatch,
  DivisionByZero,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace monodromy
