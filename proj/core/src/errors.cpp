#include "blob/errors.hpp"

namespace blob {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EvenOrSmallL: return "EvenOrSmallL";
    case ErrorCode::MOutOfRange: return "MOutOfRange";
    case ErrorCode::BadN: return "BadN";
    case ErrorCode::MalformedWalk: return "MalformedWalk";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::BadPosition: return "BadPosition";
    case ErrorCode::NotInResidueClass: return "NotInResidueClass";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::IndexMismatch: return "IndexMismatch";
    case ErrorCode::NotSolvable: return "NotSolvable";
    case ErrorCode::InconsistentData: return "InconsistentData";
  }
  return "UnknownError";
}

bool is_user_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSolvable:
    case ErrorCode::InconsistentData:
      return false;
    default:
      return true;
  }
}

BlobError::BlobError(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message),
      _code(code) {}

void fail(ErrorCode code, const std::string& message) {
  throw BlobError(code, message);
}

}  // namespace blob
