#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace sublat {

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1}.
///
/// Products follow the right-action convention: `(a * b)[x] == b[a[x]]`,
/// i.e. `a` is applied first. Ordering is lexicographic on the image
/// sequence, which makes the identity the smallest permutation of its degree.
class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds a permutation from disjoint cycles of 0-based points. Throws
  /// std::invalid_argument on out-of-range or repeated points.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// Nontrivial cycles, each starting at its smallest point, sorted by that point.
  std::vector<std::vector<Point>> cycles() const;

  /// Cycle notation, "()" for the identity.
  std::string to_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace sublat
