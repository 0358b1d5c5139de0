#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sublat {

enum class ErrorCode {
  kDegreeMismatch,
  kOrderCapExceeded,
  kSubgroupCapExceeded,
  kSearchCapExceeded,
  kForeignSubgroup,
  kParentMismatch,
  kNotNormal,
  kNotContained,
  kInvalidAction,
  kUnknownClass,
  kParseError,
  kUnsupportedFormat,
  kUnknownName,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for the library; `code()` tells callers what went
/// wrong without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

  /// True for the three "computation too large" codes. Harness code turns
  /// these into UNDECIDED verdicts instead of failures.
  bool is_cap() const noexcept;

 private:
  ErrorCode code_;
};

/// Size limits for the exhaustive algorithms. Every default matches the
/// documented behaviour of the CLI.
struct Limits {
  std::size_t max_order = 5000;         // group_generate and friends
  std::size_t lattice_order_cap = 400;  // enumerate_subgroups
  std::size_t subgroup_cap = 20000;     // enumerate_subgroups
  std::size_t isomorphism_cap = 200;    // is_isomorphic
  std::size_t g_isomorphism_cap = 64;   // g_isomorphic on chief factors
};

}  // namespace sublat
