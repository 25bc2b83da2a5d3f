#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace docsum {

enum class ErrorKind {
  MalformedInput,
  EmptyDocument,
  InvalidPosition,
  ComponentOutOfRange,
  InvalidClipFactor,
  InvalidLimit,
  InvalidConfig,
  IoFailure,
  SchemaMismatch,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so callers and tests can
// tell the error classes apart without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace docsum
