#pragma once

#include <stdexcept>
#include <string>

namespace vscan {

enum class ErrorCode {
  NoFrames,
  DecodeError,
  InvalidRate,
  DecoderUnavailable,
  ShapeError,
  NormalizationError,
  UnknownFrame,
  IoError,
  CacheVersionError,
  ManifestError,
};

inline const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NoFrames: return "NoFrames";
    case ErrorCode::DecodeError: return "DecodeError";
    case ErrorCode::InvalidRate: return "InvalidRate";
    case ErrorCode::DecoderUnavailable: return "DecoderUnavailable";
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::NormalizationError: return "NormalizationError";
    case ErrorCode::UnknownFrame: return "UnknownFrame";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::CacheVersionError: return "CacheVersionError";
    case ErrorCode::ManifestError: return "ManifestError";
  }
  return "Error";
}

// Errors caused by user-supplied inputs (paths, files, rates) map to CLI
// exit code 2; everything else is an internal error (exit code 1).
inline bool is_bad_input(ErrorCode code) {
  switch (code) {
    case ErrorCode::NoFrames:
    case ErrorCode::DecodeError:
    case ErrorCode::InvalidRate:
    case ErrorCode::DecoderUnavailable:
    case ErrorCode::IoError:
    case ErrorCode::ManifestError:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  const char* name() const noexcept { return error_name(code_); }
  bool bad_input() const noexcept { return is_bad_input(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace vscan
