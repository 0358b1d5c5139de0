#include "sublat/subgroup.hpp"

namespace sublat {

bool canonical_less(const Mask& a, const Mask& b) {
  auto i = a.find_first();
  auto j = b.find_first();
  while (i != Mask::npos && j != Mask::npos) {
    if (i != j) return i < j;
    i = a.find_next(i);
    j = b.find_next(j);
  }
  return i == Mask::npos && j != Mask::npos;
}

std::vector<Elem> mask_elements(const Mask& m) {
  std::vector<Elem> out;
  out.reserve(m.count());
  for (auto i = m.find_first(); i != Mask::npos; i = m.find_next(i)) {
    out.push_back(static_cast<Elem>(i));
  }
  return out;
}

Subgroup::Subgroup(GroupPtr parent, Mask mask)
    : parent_(std::move(parent)), mask_(std::move(mask)), order_(mask_.count()) {
  if (mask_.size() != parent_->order()) {
    throw Error(ErrorCode::kParentMismatch, "mask size does not match parent order");
  }
}

Subgroup Subgroup::trivial(const GroupPtr& parent) {
  Mask m(parent->order());
  m.set(Group::identity());
  return Subgroup(parent, std::move(m));
}

Subgroup Subgroup::whole(const GroupPtr& parent) {
  Mask m(parent->order());
  m.set();
  return Subgroup(parent, std::move(m));
}

bool Subgroup::is_closed() const {
  if (!contains(Group::identity())) return false;
  const auto elems = elements();
  for (Elem a : elems) {
    if (!contains(parent_->inv(a))) return false;
    for (Elem b : elems) {
      if (!contains(parent_->mul(a, b))) return false;
    }
  }
  return true;
}

Mask closure_mask(const Group& g, std::span<const Elem> gens) {
  Mask m(g.order());
  m.set(Group::identity());
  return extend_closure(g, m, gens);
}

Mask extend_closure(const Group& g, const Mask& base, std::span<const Elem> all_gens) {
  Mask m = base;
  std::vector<Elem> list = mask_elements(base);
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (Elem s : all_gens) {
      Elem y = g.mul(list[i], s);
      if (!m.test(y)) {
        m.set(y);
        list.push_back(y);
      }
    }
  }
  return m;
}

Subgroup generate_subgroup(const GroupPtr& g, std::span<const Elem> gens) {
  return Subgroup(g, closure_mask(*g, gens));
}

std::vector<Elem> generators_of(const Subgroup& a) {
  std::vector<Elem> gens;
  Mask current(a.parent().order());
  current.set(Group::identity());
  for (auto i = a.mask().find_first(); i != Mask::npos; i = a.mask().find_next(i)) {
    if (current.test(i)) continue;
    gens.push_back(static_cast<Elem>(i));
    current = extend_closure(a.parent(), current, gens);
    if (current.count() == a.order()) break;
  }
  return gens;
}

void require_member_of(const GroupPtr& g, const Subgroup& a) {
  if (a.parent_ptr() != g) {
    throw Error(ErrorCode::kForeignSubgroup, "subgroup does not belong to group '" +
                                                 g->name() + "'");
  }
}

void require_same_parent(const Subgroup& a, const Subgroup& b) {
  if (a.parent_ptr() != b.parent_ptr()) {
    throw Error(ErrorCode::kParentMismatch, "subgroups have different parents");
  }
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  return Subgroup(a.parent_ptr(), a.mask() & b.mask());
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  if (b.is_subgroup_of(a)) return a;
  if (a.is_subgroup_of(b)) return b;
  auto gens = generators_of(a);
  auto more = generators_of(b);
  gens.insert(gens.end(), more.begin(), more.end());
  return Subgroup(a.parent_ptr(), extend_closure(a.parent(), a.mask(), gens));
}

Mask conjugate_mask(const Group& g, const Mask& m, Elem by) {
  Mask out(g.order());
  for (auto i = m.find_first(); i != Mask::npos; i = m.find_next(i)) {
    out.set(g.conj(static_cast<Elem>(i), by));
  }
  return out;
}

}  // namespace sublat
