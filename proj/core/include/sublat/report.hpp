#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "sublat/checks.hpp"

namespace sublat {

enum class Format { kText, kJson, kDot };

/// Throws UnsupportedFormat for anything but text, json, dot.
Format parse_format(std::string_view text);

/// TEXT and JSON only; DOT throws UnsupportedFormat.
std::string export_report(const Report& report, Format format);

/// Hasse diagram of the subgroup lattice. Members of `highlight` are filled.
/// JSON and DOT only.
std::string export_lattice(Workspace& ws, Format format,
                           const std::optional<LatticeSpec>& highlight = std::nullopt);

/// Structural summary of a group: orders, classes, series, T/PT/PST label.
std::string export_analysis(Workspace& ws, Format format);

}  // namespace sublat
