#include "sublat/group.hpp"

#include <algorithm>
#include <unordered_set>

namespace sublat {

namespace {

constexpr std::size_t kTableCap = 1024;

}  // namespace

GroupPtr group_generate(std::size_t degree, std::vector<Permutation> gens, std::string name,
                        const Limits& limits) {
  if (degree == 0) throw Error(ErrorCode::kDegreeMismatch, "degree must be positive");
  for (const auto& g : gens) {
    if (g.degree() != degree) {
      throw Error(ErrorCode::kDegreeMismatch, "generator " + g.to_string() + " has degree " +
                                                  std::to_string(g.degree()) + ", expected " +
                                                  std::to_string(degree));
    }
  }
  std::erase_if(gens, [](const Permutation& g) { return g.is_identity(); });

  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> list{Permutation::identity(degree)};
  seen.insert(list.front());
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (const auto& g : gens) {
      Permutation next = list[i] * g;
      if (seen.insert(next).second) {
        list.push_back(std::move(next));
        if (list.size() > limits.max_order) {
          throw Error(ErrorCode::kOrderCapExceeded,
                      "closure exceeds order cap " + std::to_string(limits.max_order));
        }
      }
    }
  }
  std::sort(list.begin(), list.end());

  auto* raw = new Group();
  GroupPtr group(raw);
  raw->degree_ = degree;
  raw->name_ = std::move(name);
  raw->generators_ = std::move(gens);
  raw->elements_ = std::move(list);
  raw->finish();
  return group;
}

GroupPtr group_from_sorted(std::size_t degree, std::vector<Permutation> gens,
                           std::vector<Permutation> sorted_elements, std::string name) {
  auto* raw = new Group();
  GroupPtr group(raw);
  raw->degree_ = degree;
  raw->name_ = std::move(name);
  std::erase_if(gens, [](const Permutation& g) { return g.is_identity(); });
  raw->generators_ = std::move(gens);
  raw->elements_ = std::move(sorted_elements);
  raw->finish();
  return group;
}

void Group::finish() {
  const std::size_t n = elements_.size();
  index_.reserve(n);
  for (Elem i = 0; i < n; ++i) index_.emplace(elements_[i], i);
  generator_ids_.clear();
  for (const auto& g : generators_) generator_ids_.push_back(index_.at(g));

  if (n <= kTableCap) {
    table_.resize(n * n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) table_[a * n + b] = index_.at(elements_[a] * elements_[b]);
    }
  }
  inverse_.resize(n);
  for (Elem a = 0; a < n; ++a) inverse_[a] = index_.at(elements_[a].inverse());

  element_orders_.assign(n, 0);
  for (Elem a = 0; a < n; ++a) {
    std::size_t k = 1;
    for (Elem x = a; x != identity(); x = mul(x, a)) ++k;
    element_orders_[a] = k;
  }
}

std::optional<Elem> Group::find(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Elem Group::mul(Elem a, Elem b) const {
  if (!table_.empty()) return table_[a * elements_.size() + b];
  return index_.at(elements_[a] * elements_[b]);
}

Elem Group::pow(Elem a, std::size_t n) const {
  n %= element_orders_[a];
  Elem result = identity();
  Elem base = a;
  while (n) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

bool Group::is_abelian() const {
  for (Elem a : generator_ids_) {
    for (Elem b : generator_ids_) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

GroupPtr Group::renamed(std::string name) const {
  auto* raw = new Group(*this);
  raw->name_ = std::move(name);
  return GroupPtr(raw);
}

bool Morphism::is_homomorphism() const {
  const Group& s = *source;
  const Group& t = *target;
  if (map.size() != s.order()) return false;
  for (Elem a = 0; a < s.order(); ++a) {
    for (Elem b = 0; b < s.order(); ++b) {
      if (map[s.mul(a, b)] != t.mul(map[a], map[b])) return false;
    }
  }
  return true;
}

bool Morphism::is_surjective() const {
  std::vector<bool> hit(target->order(), false);
  for (Elem e : map) hit[e] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

}  // namespace sublat
