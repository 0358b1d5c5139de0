#include "sublat/group_io.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

namespace sublat {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::vector<Point>> parse_cycles(std::string_view text, std::size_t line) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (i == text.size()) fail(line, "gen needs at least one cycle");
  while (i < text.size()) {
    if (text[i] != '(') fail(line, "expected '('");
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (i == text.size()) fail(line, "unbalanced cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      Point p = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), p);
      if (ec != std::errc()) fail(line, "expected a point index");
      i = static_cast<std::size_t>(ptr - text.data());
      cycle.push_back(p);
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_space();
  }
  return cycles;
}

}  // namespace

GroupPtr parse_group(std::string_view text, const Limits& limits) {
  std::optional<std::string> name;
  std::optional<std::size_t> degree;
  std::vector<std::pair<std::size_t, std::vector<std::vector<Point>>>> gens;

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto sp = line.find_first_of(" \t");
    const std::string_view key = line.substr(0, sp);
    const std::string_view rest = sp == std::string_view::npos ? "" : trim(line.substr(sp));
    if (key == "name") {
      if (rest.empty() || rest.find_first_of(" \t") != std::string_view::npos) {
        fail(line_no, "name takes one token");
      }
      name = std::string(rest);
    } else if (key == "degree") {
      std::size_t d = 0;
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), d);
      if (ec != std::errc() || ptr != rest.data() + rest.size() || d == 0) {
        fail(line_no, "degree must be a positive integer");
      }
      degree = d;
    } else if (key == "gen") {
      gens.emplace_back(line_no, parse_cycles(rest, line_no));
    } else {
      fail(line_no, "unknown keyword '" + std::string(key) + "'");
    }
  }
  if (!name) fail(line_no, "missing name");
  if (!degree) fail(line_no, "missing degree");

  std::vector<Permutation> perms;
  for (auto& [at, cycles] : gens) {
    try {
      perms.push_back(Permutation::from_cycles(*degree, cycles));
    } catch (const std::invalid_argument& e) {
      throw Error(ErrorCode::kDegreeMismatch, "line " + std::to_string(at) + ": " + e.what());
    }
  }
  return group_generate(*degree, std::move(perms), *name, limits);
}

std::string render_group(const Group& g) {
  std::ostringstream out;
  out << "name " << (g.name().empty() ? "G" : g.name()) << "\n";
  out << "degree " << g.degree() << "\n";
  for (const auto& p : g.generators()) out << "gen " << p.to_string() << "\n";
  return out.str();
}

}  // namespace sublat
