#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace axokern {

// Failure categories surfaced by kernel and document operations.
enum class ErrorCode {
  kDegenerateVector,
  kDegenerateInput,
  kDegenerateProjection,
  kInvalidScale,
  kInvalidOrientation,
  kInvalidAttachment,
  kInvalidCut,
  kInvalidOffset,
  kInvalidPlane,
  kInvalidRun,
  kDuplicateId,
  kUnknownPipe,
  kUnknownBlock,
  kOverlappingBlocks,
  kCutOutOfRange,
  kAmbiguousInverse,
  kParseError,
  kIoError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDegenerateVector: return "DegenerateVector";
    case ErrorCode::kDegenerateInput: return "DegenerateInput";
    case ErrorCode::kDegenerateProjection: return "DegenerateProjection";
    case ErrorCode::kInvalidScale: return "InvalidScale";
    case ErrorCode::kInvalidOrientation: return "InvalidOrientation";
    case ErrorCode::kInvalidAttachment: return "InvalidAttachment";
    case ErrorCode::kInvalidCut: return "InvalidCut";
    case ErrorCode::kInvalidOffset: return "InvalidOffset";
    case ErrorCode::kInvalidPlane: return "InvalidPlane";
    case ErrorCode::kInvalidRun: return "InvalidRun";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kUnknownPipe: return "UnknownPipe";
    case ErrorCode::kUnknownBlock: return "UnknownBlock";
    case ErrorCode::kOverlappingBlocks: return "OverlappingBlocks";
    case ErrorCode::kCutOutOfRange: return "CutOutOfRange";
    case ErrorCode::kAmbiguousInverse: return "AmbiguousInverse";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "UnknownError";
}

class KernelError : public std::runtime_error {
 public:
  KernelError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw KernelError(code, message);
}

}  // namespace axokern
