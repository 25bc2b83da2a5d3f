#include "docsum/error.hpp"

namespace docsum {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::EmptyDocument: return "EmptyDocument";
    case ErrorKind::InvalidPosition: return "InvalidPosition";
    case ErrorKind::ComponentOutOfRange: return "ComponentOutOfRange";
    case ErrorKind::InvalidClipFactor: return "InvalidClipFactor";
    case ErrorKind::InvalidLimit: return "InvalidLimit";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::IoFailure: return "IoFailure";
    case ErrorKind::SchemaMismatch: return "SchemaMismatch";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace docsum
