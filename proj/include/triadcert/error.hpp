#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace triadcert {

enum class ErrorCode {
  NonPrimeModulus,
  ReducibleModulus,
  DegreeTooSmall,
  InvalidModulus,
  DivisionByZero,
  FieldMismatch,
  InfiniteField,
  LengthMismatch,
  DimensionMismatch,
  CapExceeded,
  HypothesesViolated,
  RankNotOne,
  WeightTooSmall,
  UnsupportedField,
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

}  // namespace triadcert
