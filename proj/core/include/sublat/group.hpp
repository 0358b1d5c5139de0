#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sublat/error.hpp"
#include "sublat/permutation.hpp"

namespace sublat {

/// Index of an element in its group's canonical element list.
using Elem = std::uint32_t;

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// A finite permutation group with every element enumerated.
///
/// Elements are sorted lexicographically by image sequence, so element 0 is
/// always the identity and every index-based result (masks, series, reports)
/// is reproducible. Instances are immutable and shared through `GroupPtr`.
class Group {
 public:
  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::string& name() const noexcept { return name_; }

  std::span<const Permutation> generators() const noexcept { return generators_; }
  std::span<const Elem> generator_ids() const noexcept { return generator_ids_; }
  std::span<const Permutation> elements() const noexcept { return elements_; }
  const Permutation& element(Elem e) const { return elements_[e]; }

  static constexpr Elem identity() noexcept { return 0; }

  std::optional<Elem> find(const Permutation& p) const;

  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const { return inverse_[a]; }
  /// g^-1 a g
  Elem conj(Elem a, Elem g) const { return mul(mul(inv(g), a), g); }
  /// a^-1 b^-1 a b
  Elem commutator(Elem a, Elem b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  Elem pow(Elem a, std::size_t n) const;
  std::size_t element_order(Elem a) const { return element_orders_[a]; }

  bool is_abelian() const;

  /// Same group under another label.
  GroupPtr renamed(std::string name) const;

 private:
  friend GroupPtr group_generate(std::size_t, std::vector<Permutation>, std::string,
                                 const Limits&);
  friend GroupPtr group_from_sorted(std::size_t, std::vector<Permutation>,
                                    std::vector<Permutation>, std::string);

  Group() = default;
  void finish();

  std::size_t degree_ = 0;
  std::string name_;
  std::vector<Permutation> generators_;
  std::vector<Elem> generator_ids_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, Elem, PermutationHash> index_;
  std::vector<Elem> table_;  // Cayley table, only for small groups
  std::vector<Elem> inverse_;
  std::vector<std::size_t> element_orders_;
};

/// Closure of `gens` under composition. Identity generators are dropped.
/// Throws DegreeMismatch and OrderCapExceeded.
GroupPtr group_generate(std::size_t degree, std::vector<Permutation> gens, std::string name = {},
                        const Limits& limits = {});

/// Builds a group from an already closed, lexicographically sorted element
/// list. Only for internal use by code that restricts a known group.
GroupPtr group_from_sorted(std::size_t degree, std::vector<Permutation> gens,
                           std::vector<Permutation> sorted_elements, std::string name);

/// Homomorphism given by its table on element indices.
struct Morphism {
  GroupPtr source;
  GroupPtr target;
  std::vector<Elem> map;

  Elem operator()(Elem e) const { return map[e]; }
  bool is_homomorphism() const;
  bool is_surjective() const;
};

}  // namespace sublat
