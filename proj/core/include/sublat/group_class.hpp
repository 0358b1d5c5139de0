#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace sublat {

enum class GroupClass { kAbelian, kNilpotent, kSupersoluble, kSoluble };

inline constexpr std::array<GroupClass, 4> kAllClasses = {
    GroupClass::kAbelian, GroupClass::kNilpotent, GroupClass::kSupersoluble, GroupClass::kSoluble};

/// Closure properties of a class. These are declared, not computed; tests
/// spot-check them on the corpus.
struct ClassFlags {
  bool formation;
  bool normally_hereditary;
  bool saturated;
  bool fitting;
  bool contains_nilpotent;
};

constexpr ClassFlags flags(GroupClass c) {
  switch (c) {
    case GroupClass::kAbelian: return {true, true, false, false, false};
    case GroupClass::kNilpotent: return {true, true, true, true, true};
    case GroupClass::kSupersoluble: return {true, true, true, false, true};
    case GroupClass::kSoluble: return {true, true, true, true, true};
  }
  return {};
}

constexpr std::string_view to_string(GroupClass c) {
  switch (c) {
    case GroupClass::kAbelian: return "abelian";
    case GroupClass::kNilpotent: return "nilpotent";
    case GroupClass::kSupersoluble: return "supersoluble";
    case GroupClass::kSoluble: return "soluble";
  }
  return "?";
}

/// Accepts the lower-case names above; throws UnknownClass otherwise.
GroupClass parse_group_class(std::string_view name);

}  // namespace sublat
