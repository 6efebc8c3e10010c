#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace valdim {

enum class ErrorCode {
  EmptySpace,
  OutOfSpace,
  SpaceMismatch,
  GroupMismatch,
  NotPositive,
  NegativeInput,
  InfiniteShift,
  ImproperResult,
  IllegalShift,
  NotPrime,
  UnsupportedGamma,
  UndefinedDimension,
  UnboundedFragment,
  NotIsomorphic,
  InvalidArgument,
  Syntax,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failure; offset is a byte position into the parsed text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& message);
  std::size_t offset() const noexcept { return offset_; }
  // The message without the position suffix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t offset_;
  std::string message_;
};

}  // namespace valdim
