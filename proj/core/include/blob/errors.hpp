#pragma once

#include <stdexcept>
#include <string>

namespace blob {

// Failure categories surfaced to callers. The CLI maps user-input codes to
// exit code 2 and internal codes to exit code 1.
enum class ErrorCode {
  EvenOrSmallL,
  MOutOfRange,
  BadN,
  MalformedWalk,
  SizeMismatch,
  BadPosition,
  NotInResidueClass,
  NotAPartition,
  TooLarge,
  IndexMismatch,
  NotSolvable,
  InconsistentData,
};

const char* error_name(ErrorCode code);

// True for codes caused by bad arguments rather than broken internal state.
bool is_user_error(ErrorCode code);

class BlobError : public std::runtime_error {
 public:
  BlobError(ErrorCode code, const std::string& message);
  ErrorCode code() const { return _code; }

 private:
  ErrorCode _code;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace blob
