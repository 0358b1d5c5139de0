#pragma once

#include <string>
#include <string_view>

#include "sublat/group.hpp"

namespace sublat {

/// Reads the line format
///
///   name <token>
///   degree <n>
///   gen (0 1)(2 3)
///
/// with `#` comments. Throws ParseError (with the line number), DegreeMismatch
/// and OrderCapExceeded.
GroupPtr parse_group(std::string_view text, const Limits& limits = {});

std::string render_group(const Group& g);

}  // namespace sublat
