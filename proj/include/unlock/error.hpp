#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace unlock {

// Stable codes for rejected input. The CLI prints them verbatim.
enum class ErrorCode {
  kSyntax,
  kSchema,
  kUnknownKey,
  kVersion,
  kDanglingRef,
  kDuplicateId,
  kDuplicateFunction,
  kNotTotal,
  kEmptySet,
  kEmptyWindow,
  kDuplicateWindow,
  kUniverseMismatch,
  kNotPartialOrder,
  kNotSelection,
  kNotUnlocking,
  kNotRestrictive,
  kNotIsotone,
  kNoGreatest,
  kCapExceeded,
  kIo,
};

std::string_view to_string(ErrorCode code);

/// Input that violates a documented precondition. Maps to exit status 2.
class InputError : public std::runtime_error {
 public:
  InputError(ErrorCode code, const std::string& message, std::string path = {})
      : std::runtime_error(message), code_(code), path_(std::move(path)) {}

  ErrorCode code() const { return code_; }
  // JSON pointer-ish location inside a document, empty when not applicable.
  const std::string& path() const { return path_; }

 private:
  ErrorCode code_;
  std::string path_;
};

/// Two computations that must agree did not. Maps to exit status 1.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& message) : std::logic_error(message) {}
};

}  // namespace unlock
