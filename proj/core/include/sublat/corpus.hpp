#pragma once

#include <string_view>
#include <vector>

#include "sublat/group.hpp"

namespace sublat {

GroupPtr cyclic_group(std::size_t n);
/// Symmetries of a regular n-gon, order 2n, on n points.
GroupPtr dihedral_group(std::size_t n);
/// <a, b | a^2n = 1, b^2 = a^n, b^-1 a b = a^-1>, order 4n, regular representation.
GroupPtr dicyclic_group(std::size_t n);

/// The named built-in groups in a fixed order. `extended` adds S4xC2.
std::vector<GroupPtr> corpus(bool extended = false);

/// Looks a group up by name among the extended corpus. Throws UnknownName.
GroupPtr builtin(std::string_view name);

}  // namespace sublat
