#pragma once

#include <stdexcept>
#include <string>

namespace chaoskey {

enum class ErrorCode {
  domain_error,
  empty_key,
  key_too_short,
  key_too_long,
  malformed_index,
  bad_magic,
  version_mismatch,
  empty_input,
  io_error,
};

constexpr const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::domain_error:     return "DomainError";
    case ErrorCode::empty_key:        return "EmptyKey";
    case ErrorCode::key_too_short:    return "KeyTooShort";
    case ErrorCode::key_too_long:     return "KeyTooLong";
    case ErrorCode::malformed_index:  return "MalformedIndex";
    case ErrorCode::bad_magic:        return "BadMagic";
    case ErrorCode::version_mismatch: return "VersionMismatch";
    case ErrorCode::empty_input:      return "EmptyInput";
    case ErrorCode::io_error:         return "IoError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace chaoskey
