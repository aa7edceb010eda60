#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gausscong {

/// Failure categories shared by the C++ core and the C API status codes.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kVariableMismatch = 2,
  kZeroDenominator = 3,
  kZeroInput = 4,
  kNotVertex = 5,
  kNotPrime = 6,
  kOutOfTruncation = 7,
  kParse = 8,
  kNotLinear = 9,
  kNonIntegralExponent = 10,
  kNotFace = 11,
  kDegree = 12,
  kConstantTerm = 13,
  kOverflow = 14,
  kUndefinedSubstitution = 15,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Syntax or evaluation error in an expression; offset is a byte index into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::int64_t offset)
      : Error(ErrorCode::kParse, message + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::int64_t offset() const noexcept { return offset_; }

 private:
  std::int64_t offset_;
};

}  // namespace gausscong
