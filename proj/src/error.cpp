#include "valdim/error.hpp"

namespace valdim {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptySpace: return "EmptySpace";
    case ErrorCode::OutOfSpace: return "OutOfSpace";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::NegativeInput: return "NegativeInput";
    case ErrorCode::InfiniteShift: return "InfiniteShift";
    case ErrorCode::ImproperResult: return "ImproperResult";
    case ErrorCode::IllegalShift: return "IllegalShift";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::UnsupportedGamma: return "UnsupportedGamma";
    case ErrorCode::UndefinedDimension: return "UndefinedDimension";
    case ErrorCode::UnboundedFragment: return "UnboundedFragment";
    case ErrorCode::NotIsomorphic: return "NotIsomorphic";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Syntax: return "SyntaxError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

SyntaxError::SyntaxError(std::size_t offset, const std::string& message)
    : Error(ErrorCode::Syntax, message + " at offset " + std::to_string(offset)), offset_(offset), message_(message) {}

}  // namespace valdim
