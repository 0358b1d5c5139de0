#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sublat/subgroup.hpp"

namespace sublat {

class SubgroupLattice;
using LatticePtr = std::shared_ptr<const SubgroupLattice>;

/// Every subgroup of a group, each exactly once.
///
/// Members are sorted by order and then by `canonical_less`, so index 0 is
/// the trivial subgroup and the last index is the whole group. Immutable.
class SubgroupLattice {
 public:
  const GroupPtr& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return members_.size(); }
  const Subgroup& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Subgroup>& members() const noexcept { return members_; }

  std::size_t trivial_index() const noexcept { return 0; }
  std::size_t whole_index() const noexcept { return members_.size() - 1; }

  std::optional<std::size_t> index_of(const Mask& m) const;
  std::size_t index_of(const Subgroup& s) const;

  /// members[small] <= members[big]
  bool contained(std::size_t small, std::size_t big) const { return above_[small].test(big); }

  std::size_t meet(std::size_t a, std::size_t b) const;
  std::size_t join(std::size_t a, std::size_t b) const;

  /// Indices j such that members[j] covers members[i] (Hasse edges upward).
  std::vector<std::size_t> covers(std::size_t i) const;

 private:
  friend LatticePtr enumerate_subgroups(const GroupPtr&, const Limits&);
  SubgroupLattice() = default;

  GroupPtr group_;
  std::vector<Subgroup> members_;
  std::unordered_map<Mask, std::size_t> index_;
  std::vector<boost::dynamic_bitset<std::uint64_t>> above_;  // above_[i]: members containing i
  // Dense meet/join tables for lattices small enough to afford them.
  std::vector<std::uint32_t> meet_table_;
  std::vector<std::uint32_t> join_table_;
};

/// Cyclic-extension enumeration: start from the trivial subgroup and join
/// with cyclic subgroups of prime-power order until nothing new appears.
/// Throws OrderCapExceeded and SubgroupCapExceeded.
LatticePtr enumerate_subgroups(const GroupPtr& g, const Limits& limits = {});

/// (A n B, <A, B>)
std::pair<Subgroup, Subgroup> meet_join(const Subgroup& a, const Subgroup& b);

struct Distinguished {
  std::vector<Subgroup> normal;
  std::vector<Subgroup> minimal_normal;
  std::vector<Subgroup> maximal;
  Subgroup frattini;
};

Distinguished distinguished_subgroups(const SubgroupLattice& lattice);

/// All Sylow p-subgroups, or just the trivial subgroup when p does not divide |G|.
std::vector<Subgroup> sylow_subgroups(const SubgroupLattice& lattice, std::size_t p);

/// Kurosh modular element test over the whole lattice.
bool is_modular_subgroup(const SubgroupLattice& lattice, std::size_t m);
bool is_modular_subgroup(const SubgroupLattice& lattice, const Subgroup& m);

}  // namespace sublat
