#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sublat/class_lattices.hpp"

namespace sublat {

enum class CheckId {
  kThm11i,
  kThm11ii,
  kThm11iii,
  kCor12,
  kCor13,
  kThm14i,
  kThm14ii,
  kThm15,
  kCor16,
  kCor17,
  kCor18,
  kLem21,
  kLem22,
  kRem31,
  kQnHyp,
};

inline constexpr std::array<CheckId, 15> kAllChecks = {
    CheckId::kThm11i, CheckId::kThm11ii, CheckId::kThm11iii, CheckId::kCor12, CheckId::kCor13,
    CheckId::kThm14i, CheckId::kThm14ii, CheckId::kThm15,    CheckId::kCor16, CheckId::kCor17,
    CheckId::kCor18,  CheckId::kLem21,   CheckId::kLem22,    CheckId::kRem31, CheckId::kQnHyp,
};

/// "THM-1.1i" and so on.
std::string_view to_string(CheckId id);
/// Throws UnknownName.
CheckId parse_check_id(std::string_view text);

/// One-line statement of what the check evaluates.
std::string_view describe(CheckId id);

enum class Verdict { kPass, kFail, kVacuous, kUndecided };

std::string_view to_string(Verdict v);

struct CheckResult {
  std::string group;
  CheckId check;
  Verdict verdict;
  std::optional<std::string> witness;  // set for FAIL; UNDECIDED carries the cap message
  std::string detail;
};

/// Evaluates one claim on the workspace's group. Cap errors become UNDECIDED;
/// other errors propagate.
CheckResult run_check(Workspace& ws, CheckId id);

struct Summary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t vacuous = 0;
  std::size_t undecided = 0;
};

struct Report {
  std::vector<CheckResult> results;

  Summary summary() const;
};

/// Every (group, check) cell in input order. Any error inside a cell is
/// reported as UNDECIDED for that cell.
Report run_suite(const std::vector<GroupPtr>& groups, const std::vector<CheckId>& checks,
                 const Limits& limits = {});

/// "<(0 1),(2 3)> order 4"
std::string describe(const Subgroup& s);

}  // namespace sublat
