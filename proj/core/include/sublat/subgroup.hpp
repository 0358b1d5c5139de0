#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "sublat/group.hpp"

namespace sublat {

/// Membership bitmask over a parent group's element indices.
using Mask = boost::dynamic_bitset<std::uint64_t>;

/// Total order on masks used wherever a deterministic choice between
/// subgroups is needed: compare the sorted element-index lists
/// lexicographically.
bool canonical_less(const Mask& a, const Mask& b);

std::vector<Elem> mask_elements(const Mask& m);

/// A subgroup of `parent`, identified by its element mask.
class Subgroup {
 public:
  /// `mask` must describe a subgroup; closure is not re-verified here (use
  /// `is_closed`). Throws ParentMismatch if the mask has the wrong size.
  Subgroup(GroupPtr parent, Mask mask);

  static Subgroup trivial(const GroupPtr& parent);
  static Subgroup whole(const GroupPtr& parent);

  const GroupPtr& parent_ptr() const noexcept { return parent_; }
  const Group& parent() const noexcept { return *parent_; }
  const Mask& mask() const noexcept { return mask_; }
  std::size_t order() const noexcept { return order_; }
  bool contains(Elem e) const { return mask_.test(e); }
  std::vector<Elem> elements() const { return mask_elements(mask_); }

  bool is_trivial() const noexcept { return order_ == 1; }
  bool is_whole() const noexcept { return order_ == parent_->order(); }
  bool is_subgroup_of(const Subgroup& other) const { return mask_.is_subset_of(other.mask_); }

  /// Full closure check (identity, products, inverses).
  bool is_closed() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.mask_ == b.mask_;
  }

 private:
  GroupPtr parent_;
  Mask mask_;
  std::size_t order_;
};

/// Smallest subgroup containing `gens`.
Mask closure_mask(const Group& g, std::span<const Elem> gens);

/// Smallest subgroup containing the subgroup `base` and `all_gens`, where
/// `all_gens` must include a generating set of `base`.
Mask extend_closure(const Group& g, const Mask& base, std::span<const Elem> all_gens);

Subgroup generate_subgroup(const GroupPtr& g, std::span<const Elem> gens);

/// A small generating set: scan elements in index order and keep each one
/// not yet in the closure of the previous picks.
std::vector<Elem> generators_of(const Subgroup& a);

/// Throws ForeignSubgroup unless `a` lives in `g`.
void require_member_of(const GroupPtr& g, const Subgroup& a);

/// Throws ParentMismatch unless both subgroups share a parent.
void require_same_parent(const Subgroup& a, const Subgroup& b);

Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup join(const Subgroup& a, const Subgroup& b);

/// {g^-1 a g : a in mask}
Mask conjugate_mask(const Group& g, const Mask& m, Elem by);

}  // namespace sublat
