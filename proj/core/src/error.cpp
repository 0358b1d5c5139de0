#include "sublat/error.hpp"

namespace sublat {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kDegreeMismatch: return "DegreeMismatch";
    case ErrorCode::kOrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::kSubgroupCapExceeded: return "SubgroupCapExceeded";
    case ErrorCode::kSearchCapExceeded: return "SearchCapExceeded";
    case ErrorCode::kForeignSubgroup: return "ForeignSubgroup";
    case ErrorCode::kParentMismatch: return "ParentMismatch";
    case ErrorCode::kNotNormal: return "NotNormal";
    case ErrorCode::kNotContained: return "NotContained";
    case ErrorCode::kInvalidAction: return "InvalidAction";
    case ErrorCode::kUnknownClass: return "UnknownClass";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kUnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::kUnknownName: return "UnknownName";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

bool Error::is_cap() const noexcept {
  return code_ == ErrorCode::kOrderCapExceeded || code_ == ErrorCode::kSubgroupCapExceeded ||
         code_ == ErrorCode::kSearchCapExceeded;
}

}  // namespace sublat
