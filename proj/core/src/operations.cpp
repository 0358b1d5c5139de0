#include "sublat/operations.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace sublat {

Mask product_set(const GroupPtr& g, const Subgroup& a, const Subgroup& b) {
  require_member_of(g, a);
  require_member_of(g, b);
  Mask out(g->order());
  const auto as = a.elements();
  const auto bs = b.elements();
  for (Elem x : as) {
    for (Elem y : bs) out.set(g->mul(x, y));
  }
  const std::size_t meet = (a.mask() & b.mask()).count();
  if (out.count() * meet != a.order() * b.order()) {
    throw std::logic_error("product formula |AB||A n B| = |A||B| violated");
  }
  return out;
}

bool permutes(const GroupPtr& g, const Subgroup& a, const Subgroup& b) {
  if (a.is_subgroup_of(b) || b.is_subgroup_of(a)) return true;
  return product_set(g, a, b) == product_set(g, b, a);
}

bool is_normal(const GroupPtr& g, const Subgroup& a) {
  require_member_of(g, a);
  for (Elem s : generators_of(a)) {
    for (Elem x : g->generator_ids()) {
      if (!a.contains(g->conj(s, x))) return false;
    }
  }
  return true;
}

namespace {

// Closes `gens` under the subgroup operations and under conjugation by
// `conjugators`.
Mask normal_closure_mask(const Group& g, std::vector<Elem> gens,
                         std::span<const Elem> conjugators) {
  Mask m = closure_mask(g, gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (Elem x : conjugators) {
      Elem c = g.conj(gens[i], x);
      if (!m.test(c)) {
        gens.push_back(c);
        m = extend_closure(g, m, gens);
      }
    }
  }
  return m;
}

}  // namespace

Subgroup normal_closure(const GroupPtr& g, const Subgroup& a) {
  require_member_of(g, a);
  return Subgroup(g, normal_closure_mask(*g, generators_of(a), g->generator_ids()));
}

Subgroup normal_closure_in(const GroupPtr& g, const Subgroup& ambient, const Subgroup& a) {
  require_member_of(g, ambient);
  require_member_of(g, a);
  if (!a.is_subgroup_of(ambient)) {
    throw Error(ErrorCode::kNotContained, "subgroup is not contained in the ambient subgroup");
  }
  const auto conjugators = generators_of(ambient);
  return Subgroup(g, normal_closure_mask(*g, generators_of(a), conjugators));
}

Subgroup normal_closure_of(const GroupPtr& g, std::span<const Elem> elems) {
  std::vector<Elem> gens;
  for (Elem e : elems) {
    if (e != Group::identity()) gens.push_back(e);
  }
  return Subgroup(g, normal_closure_mask(*g, std::move(gens), g->generator_ids()));
}

Subgroup core(const GroupPtr& g, const Subgroup& a) {
  require_member_of(g, a);
  Mask c = a.mask();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem x : g->generator_ids()) {
      Mask next = c & conjugate_mask(*g, c, x);
      if (next != c) {
        c = std::move(next);
        changed = true;
      }
    }
  }
  return Subgroup(g, std::move(c));
}

Subgroup centralizer_normalizer(const GroupPtr& g, const Subgroup& a, CentralizerMode mode) {
  require_member_of(g, a);
  const auto gens = generators_of(a);
  Mask out(g->order());
  for (Elem x = 0; x < g->order(); ++x) {
    bool ok = true;
    for (Elem s : gens) {
      if (mode == CentralizerMode::kCentralize) {
        ok = g->mul(x, s) == g->mul(s, x);
      } else {
        ok = a.contains(g->conj(s, x));
      }
      if (!ok) break;
    }
    if (ok) out.set(x);
  }
  return Subgroup(g, std::move(out));
}

Quotient quotient(const GroupPtr& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw Error(ErrorCode::kNotNormal, "quotient by a non-normal subgroup");
  const Group& G = *g;
  const auto n_elems = n.elements();

  // Cosets are numbered by their smallest element.
  std::vector<Elem> coset_of(G.order(), static_cast<Elem>(-1));
  std::vector<Elem> reps;
  for (Elem x = 0; x < G.order(); ++x) {
    if (coset_of[x] != static_cast<Elem>(-1)) continue;
    const auto id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem y : n_elems) coset_of[G.mul(y, x)] = id;
  }
  const std::size_t k = reps.size();

  auto action_of = [&](Elem x) {
    std::vector<Point> images(k);
    for (std::size_t c = 0; c < k; ++c) images[c] = coset_of[G.mul(reps[c], x)];
    return Permutation(std::move(images));
  };

  std::vector<Permutation> gens;
  for (Elem s : G.generator_ids()) gens.push_back(action_of(s));
  Limits unlimited;
  unlimited.max_order = k;
  GroupPtr q = group_generate(k, std::move(gens), G.name() + "/N", unlimited);

  std::vector<Elem> rep_image(k);
  for (std::size_t c = 0; c < k; ++c) rep_image[c] = *q->find(action_of(reps[c]));
  Morphism proj{g, q, std::vector<Elem>(G.order())};
  for (Elem x = 0; x < G.order(); ++x) proj.map[x] = rep_image[coset_of[x]];

  if (q->order() * n.order() != G.order()) {
    throw std::logic_error("quotient order is not |G|/|N|");
  }
  return {q, std::move(proj)};
}

Embedding subgroup_as_group(const Subgroup& a) {
  const Group& G = a.parent();
  Embedding out;
  out.to_parent = a.elements();
  std::vector<Permutation> elems;
  elems.reserve(out.to_parent.size());
  for (Elem e : out.to_parent) elems.push_back(G.element(e));
  std::vector<Permutation> gens;
  for (Elem e : generators_of(a)) gens.push_back(G.element(e));
  out.group = group_from_sorted(G.degree(), std::move(gens), std::move(elems), G.name() + "_sub");
  return out;
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, const Limits& limits) {
  if (a->order() * b->order() > limits.max_order) {
    throw Error(ErrorCode::kOrderCapExceeded, "direct product exceeds order cap");
  }
  const std::size_t da = a->degree();
  const std::size_t db = b->degree();
  std::vector<Permutation> gens;
  for (const auto& p : a->generators()) {
    std::vector<Point> img(da + db);
    for (std::size_t i = 0; i < da; ++i) img[i] = p[static_cast<Point>(i)];
    for (std::size_t i = 0; i < db; ++i) img[da + i] = static_cast<Point>(da + i);
    gens.emplace_back(std::move(img));
  }
  for (const auto& p : b->generators()) {
    std::vector<Point> img(da + db);
    for (std::size_t i = 0; i < da; ++i) img[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < db; ++i) img[da + i] = static_cast<Point>(da + p[static_cast<Point>(i)]);
    gens.emplace_back(std::move(img));
  }
  return group_generate(da + db, std::move(gens), a->name() + "x" + b->name(), limits);
}

Action Action::trivial(const Group& n, const Group& h) {
  Action act;
  std::vector<Elem> id(n.order());
  for (Elem i = 0; i < n.order(); ++i) id[i] = i;
  act.images.assign(h.order(), id);
  return act;
}

namespace {

void verify_action(const Group& n, const Group& h, const Action& action) {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::kInvalidAction, why); };
  if (action.images.size() != h.order()) fail("action must list one map per element of H");
  for (Elem x = 0; x < h.order(); ++x) {
    const auto& img = action.images[x];
    if (img.size() != n.order()) fail("automorphism table has wrong length");
    std::vector<bool> hit(n.order(), false);
    for (Elem v : img) {
      if (v >= n.order() || hit[v]) fail("map is not a bijection of N");
      hit[v] = true;
    }
    for (Elem a = 0; a < n.order(); ++a) {
      for (Elem s : n.generator_ids()) {
        if (img[n.mul(a, s)] != n.mul(img[a], img[s])) fail("map is not an endomorphism of N");
      }
    }
    for (Elem t : h.generator_ids()) {
      const auto& composed = action.images[h.mul(x, t)];
      const auto& inner = action.images[t];
      for (Elem a = 0; a < n.order(); ++a) {
        if (composed[a] != img[inner[a]]) fail("action does not respect composition in H");
      }
    }
  }
}

}  // namespace

GroupPtr semidirect_product(const GroupPtr& n, const GroupPtr& h, const Action& action,
                            const Limits& limits) {
  const Group& N = *n;
  const Group& H = *h;
  verify_action(N, H, action);
  if (N.order() * H.order() > limits.max_order) {
    throw Error(ErrorCode::kOrderCapExceeded, "semidirect product exceeds order cap");
  }
  const std::size_t nn = N.order();
  const std::size_t degree = nn + H.order();

  // The permutation of an element g is the left action of g^-1, which turns
  // the left action into a right action compatible with Permutation::operator*.
  std::vector<Permutation> gens;
  for (Elem s : N.generator_ids()) {
    const Elem s_inv = N.inv(s);
    std::vector<Point> img(degree);
    for (Elem x = 0; x < nn; ++x) img[x] = N.mul(s_inv, x);
    for (std::size_t y = 0; y < H.order(); ++y) img[nn + y] = static_cast<Point>(nn + y);
    gens.emplace_back(std::move(img));
  }
  for (Elem t : H.generator_ids()) {
    const Elem t_inv = H.inv(t);
    std::vector<Point> img(degree);
    for (Elem x = 0; x < nn; ++x) img[x] = action.images[t_inv][x];
    for (Elem y = 0; y < H.order(); ++y) img[nn + y] = static_cast<Point>(nn + H.mul(t_inv, y));
    gens.emplace_back(std::move(img));
  }
  GroupPtr out = group_generate(degree, std::move(gens), N.name() + ":" + H.name(), limits);
  if (out->order() != nn * H.order()) {
    throw std::logic_error("semidirect product has unexpected order");
  }
  return out;
}

namespace {

std::vector<std::size_t> centralizer_sizes(const Group& g) {
  std::vector<std::size_t> out(g.order(), 0);
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem b = 0; b < g.order(); ++b) {
      if (g.mul(a, b) == g.mul(b, a)) ++out[a];
    }
  }
  return out;
}

// Greedy generating set preferring elements of large order.
std::vector<Elem> iso_generators(const Group& g) {
  std::vector<Elem> by_order(g.order());
  for (Elem i = 0; i < g.order(); ++i) by_order[i] = i;
  std::stable_sort(by_order.begin(), by_order.end(), [&](Elem x, Elem y) {
    return g.element_order(x) > g.element_order(y);
  });
  std::vector<Elem> gens;
  Mask current(g.order());
  current.set(Group::identity());
  for (Elem x : by_order) {
    if (current.count() == g.order()) break;
    if (current.test(x)) continue;
    gens.push_back(x);
    current = extend_closure(g, current, gens);
  }
  return gens;
}

class IsoSearch {
 public:
  IsoSearch(const Group& a, const Group& b) : a_(a), b_(b) {}

  std::optional<std::vector<Elem>> run() {
    gens_ = iso_generators(a_);
    const auto ca = centralizer_sizes(a_);
    const auto cb = centralizer_sizes(b_);
    for (Elem g : gens_) {
      std::vector<Elem> cand;
      for (Elem y = 0; y < b_.order(); ++y) {
        if (b_.element_order(y) == a_.element_order(g) && cb[y] == ca[g]) cand.push_back(y);
      }
      candidates_.push_back(std::move(cand));
    }
    images_.assign(gens_.size(), 0);
    consistent(0);
    if (search(0)) return map_;
    return std::nullopt;
  }

 private:
  bool search(std::size_t level) {
    if (level == gens_.size()) return true;
    for (Elem y : candidates_[level]) {
      images_[level] = y;
      if (consistent(level + 1) && search(level + 1)) return true;
    }
    return false;
  }

  // Extends the partial map over <gens_[0..count)> and checks it is a
  // well-defined injective homomorphism there.
  bool consistent(std::size_t count) {
    constexpr Elem kUnset = static_cast<Elem>(-1);
    map_.assign(a_.order(), kUnset);
    std::vector<bool> used(b_.order(), false);
    map_[Group::identity()] = Group::identity();
    used[Group::identity()] = true;
    std::vector<Elem> queue{Group::identity()};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const Elem x = queue[i];
      for (std::size_t j = 0; j < count; ++j) {
        const Elem y = a_.mul(x, gens_[j]);
        const Elem fy = b_.mul(map_[x], images_[j]);
        if (map_[y] == kUnset) {
          if (used[fy]) return false;
          used[fy] = true;
          map_[y] = fy;
          queue.push_back(y);
        } else if (map_[y] != fy) {
          return false;
        }
      }
    }
    return true;
  }

  const Group& a_;
  const Group& b_;
  std::vector<Elem> gens_;
  std::vector<std::vector<Elem>> candidates_;
  std::vector<Elem> images_;
  std::vector<Elem> map_;
};

std::vector<std::size_t> order_profile(const Group& g) {
  std::vector<std::size_t> out(g.order());
  for (Elem i = 0; i < g.order(); ++i) out[i] = g.element_order(i);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<std::vector<Elem>> find_isomorphism(const Group& a, const Group& b,
                                                  const Limits& limits) {
  if (a.order() != b.order()) return std::nullopt;
  if (a.order() > limits.isomorphism_cap) {
    throw Error(ErrorCode::kSearchCapExceeded,
                "isomorphism test above order cap " + std::to_string(limits.isomorphism_cap));
  }
  if (a.is_abelian() != b.is_abelian()) return std::nullopt;
  if (order_profile(a) != order_profile(b)) return std::nullopt;
  auto ca = centralizer_sizes(a);
  auto cb = centralizer_sizes(b);
  if (std::count(ca.begin(), ca.end(), a.order()) != std::count(cb.begin(), cb.end(), b.order())) {
    return std::nullopt;
  }
  return IsoSearch(a, b).run();
}

bool is_isomorphic(const Group& a, const Group& b, const Limits& limits) {
  return find_isomorphism(a, b, limits).has_value();
}

}  // namespace sublat
