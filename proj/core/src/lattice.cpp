#include "sublat/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "sublat/arith.hpp"
#include "sublat/operations.hpp"

namespace sublat {

namespace {

constexpr std::size_t kTableCap = 2048;

}  // namespace

std::optional<std::size_t> SubgroupLattice::index_of(const Mask& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SubgroupLattice::index_of(const Subgroup& s) const {
  require_member_of(group_, s);
  return index_.at(s.mask());
}

std::size_t SubgroupLattice::meet(std::size_t a, std::size_t b) const {
  if (!meet_table_.empty()) return meet_table_[a * members_.size() + b];
  return index_.at(members_[a].mask() & members_[b].mask());
}

std::size_t SubgroupLattice::join(std::size_t a, std::size_t b) const {
  if (!join_table_.empty()) return join_table_[a * members_.size() + b];
  // Members are sorted by order, so the first common upper bound is the least one.
  return (above_[a] & above_[b]).find_first();
}

std::vector<std::size_t> SubgroupLattice::covers(std::size_t i) const {
  std::vector<std::size_t> out;
  const auto& up = above_[i];
  for (auto j = up.find_next(i); j != Mask::npos; j = up.find_next(j)) {
    bool covering = true;
    for (auto k = up.find_next(i); k != Mask::npos && k < j; k = up.find_next(k)) {
      if (contained(k, j)) {
        covering = false;
        break;
      }
    }
    if (covering) out.push_back(j);
  }
  return out;
}

LatticePtr enumerate_subgroups(const GroupPtr& g, const Limits& limits) {
  const Group& G = *g;
  if (G.order() > limits.lattice_order_cap) {
    throw Error(ErrorCode::kOrderCapExceeded, "group order " + std::to_string(G.order()) +
                                                  " above lattice cap " +
                                                  std::to_string(limits.lattice_order_cap));
  }

  struct Cyclic {
    Mask mask;
    Elem gen;
  };
  std::vector<Cyclic> cyclic;
  {
    std::unordered_map<Mask, bool> seen;
    for (Elem x = 1; x < G.order(); ++x) {
      if (!is_prime_power(G.element_order(x))) continue;
      const Elem gens[] = {x};
      Mask m = closure_mask(G, gens);
      if (seen.emplace(m, true).second) cyclic.push_back({std::move(m), x});
    }
  }

  std::vector<Mask> masks;
  std::vector<std::vector<Elem>> gens;
  std::unordered_map<Mask, std::size_t> index;
  {
    Mask trivial(G.order());
    trivial.set(Group::identity());
    index.emplace(trivial, 0);
    masks.push_back(std::move(trivial));
    gens.emplace_back();
  }
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (const auto& c : cyclic) {
      if (c.mask.is_subset_of(masks[i])) continue;
      std::vector<Elem> next_gens = gens[i];
      next_gens.push_back(c.gen);
      Mask next = extend_closure(G, masks[i], next_gens);
      if (index.contains(next)) continue;
      if (masks.size() >= limits.subgroup_cap) {
        throw Error(ErrorCode::kSubgroupCapExceeded,
                    "more than " + std::to_string(limits.subgroup_cap) + " subgroups");
      }
      index.emplace(next, masks.size());
      masks.push_back(std::move(next));
      gens.push_back(std::move(next_gens));
    }
  }

  std::vector<std::size_t> perm(masks.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const auto ca = masks[a].count();
    const auto cb = masks[b].count();
    if (ca != cb) return ca < cb;
    return canonical_less(masks[a], masks[b]);
  });

  auto* raw = new SubgroupLattice();
  LatticePtr lattice(raw);
  raw->group_ = g;
  const std::size_t n = masks.size();
  raw->members_.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    raw->index_.emplace(masks[perm[k]], k);
    raw->members_.emplace_back(g, std::move(masks[perm[k]]));
  }
  raw->above_.assign(n, boost::dynamic_bitset<std::uint64_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (raw->members_[i].is_subgroup_of(raw->members_[j])) raw->above_[i].set(j);
    }
  }
  if (n <= kTableCap) {
    std::vector<std::uint32_t> meets(n * n);
    std::vector<std::uint32_t> joins(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        meets[a * n + b] = meets[b * n + a] = static_cast<std::uint32_t>(raw->meet(a, b));
        joins[a * n + b] = joins[b * n + a] = static_cast<std::uint32_t>(raw->join(a, b));
      }
    }
    raw->meet_table_ = std::move(meets);
    raw->join_table_ = std::move(joins);
  }
  return lattice;
}

std::pair<Subgroup, Subgroup> meet_join(const Subgroup& a, const Subgroup& b) {
  return {intersect(a, b), join(a, b)};
}

Distinguished distinguished_subgroups(const SubgroupLattice& lattice) {
  const GroupPtr& g = lattice.group();
  const std::size_t n = lattice.size();
  std::vector<std::size_t> normal_idx;
  for (std::size_t i = 0; i < n; ++i) {
    if (is_normal(g, lattice[i])) normal_idx.push_back(i);
  }

  Distinguished out{{}, {}, {}, Subgroup::whole(g)};
  for (std::size_t i : normal_idx) out.normal.push_back(lattice[i]);
  for (std::size_t i : normal_idx) {
    if (i == lattice.trivial_index()) continue;
    bool minimal = std::none_of(normal_idx.begin(), normal_idx.end(), [&](std::size_t j) {
      return j != i && j != lattice.trivial_index() && lattice.contained(j, i);
    });
    if (minimal) out.minimal_normal.push_back(lattice[i]);
  }
  Mask frattini(g->order());
  frattini.set();
  for (std::size_t i = 0; i < n; ++i) {
    if (i == lattice.whole_index()) continue;
    std::size_t above = 0;
    for (std::size_t j = i; j < n; ++j) above += lattice.contained(i, j) ? 1 : 0;
    if (above == 2) {
      out.maximal.push_back(lattice[i]);
      frattini &= lattice[i].mask();
    }
  }
  out.frattini = Subgroup(g, std::move(frattini));
  return out;
}

std::vector<Subgroup> sylow_subgroups(const SubgroupLattice& lattice, std::size_t p) {
  const GroupPtr& g = lattice.group();
  if (g->order() % p != 0) return {Subgroup::trivial(g)};
  const std::size_t target = p_part(g->order(), p);
  std::vector<Subgroup> out;
  for (const auto& s : lattice.members()) {
    if (s.order() == target) out.push_back(s);
  }
  if (out.size() % p != 1 % p) throw std::logic_error("Sylow count is not 1 mod p");
  return out;
}

bool is_modular_subgroup(const SubgroupLattice& lattice, std::size_t m) {
  const std::size_t n = lattice.size();
  for (std::size_t z = 0; z < n; ++z) {
    const std::size_t mz = lattice.meet(m, z);
    for (std::size_t x = 0; x < n; ++x) {
      if (!lattice.contained(x, z)) continue;
      if (lattice.join(x, mz) != lattice.meet(lattice.join(x, m), z)) return false;
    }
  }
  for (std::size_t z = 0; z < n; ++z) {
    if (!lattice.contained(m, z)) continue;
    for (std::size_t y = 0; y < n; ++y) {
      if (lattice.join(m, lattice.meet(y, z)) != lattice.meet(lattice.join(m, y), z)) return false;
    }
  }
  return true;
}

bool is_modular_subgroup(const SubgroupLattice& lattice, const Subgroup& m) {
  return is_modular_subgroup(lattice, lattice.index_of(m));
}

}  // namespace sublat
