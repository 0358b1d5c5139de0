#include "sublat/series.hpp"

#include <algorithm>
#include <unordered_set>

#include "sublat/arith.hpp"

namespace sublat {

namespace {

Subgroup commutator_closure(const GroupPtr& g, std::span<const Elem> xs, std::span<const Elem> ys) {
  std::vector<Elem> comms;
  for (Elem x : xs) {
    for (Elem y : ys) comms.push_back(g->commutator(x, y));
  }
  return normal_closure_of(g, comms);
}

// {x : [x, y] in base for every generator y of G}
Subgroup next_upper(const GroupPtr& g, const Subgroup& base) {
  Mask out(g->order());
  for (Elem x = 0; x < g->order(); ++x) {
    bool ok = true;
    for (Elem y : g->generator_ids()) {
      if (!base.contains(g->commutator(x, y))) {
        ok = false;
        break;
      }
    }
    if (ok) out.set(x);
  }
  return Subgroup(g, std::move(out));
}

bool sorted_before(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return canonical_less(a.mask(), b.mask());
}

}  // namespace

std::vector<Subgroup> standard_series(const GroupPtr& g, SeriesKind kind) {
  std::vector<Subgroup> out;
  if (kind == SeriesKind::kUpperCentral) {
    out.push_back(Subgroup::trivial(g));
    for (;;) {
      Subgroup next = next_upper(g, out.back());
      if (next == out.back()) break;
      out.push_back(std::move(next));
    }
    return out;
  }
  out.push_back(Subgroup::whole(g));
  const auto g_gens = g->generator_ids();
  for (;;) {
    const auto gens = generators_of(out.back());
    Subgroup next = kind == SeriesKind::kDerived ? commutator_closure(g, gens, gens)
                                                 : commutator_closure(g, gens, g_gens);
    if (next == out.back()) break;
    out.push_back(std::move(next));
  }
  return out;
}

Subgroup center(const GroupPtr& g) { return next_upper(g, Subgroup::trivial(g)); }

Subgroup hypercenter(const GroupPtr& g) {
  return standard_series(g, SeriesKind::kUpperCentral).back();
}

bool is_in_class(const GroupPtr& g, GroupClass c) {
  switch (c) {
    case GroupClass::kAbelian:
      return g->is_abelian();
    case GroupClass::kNilpotent:
      return standard_series(g, SeriesKind::kLowerCentral).back().is_trivial();
    case GroupClass::kSoluble:
      return standard_series(g, SeriesKind::kDerived).back().is_trivial();
    case GroupClass::kSupersoluble: {
      if (!is_in_class(g, GroupClass::kSoluble)) return false;
      for (const auto& f : chief_series_between(g, Subgroup::trivial(g), Subgroup::whole(g))) {
        if (!is_prime(f.order())) return false;
      }
      return true;
    }
  }
  throw Error(ErrorCode::kUnknownClass, "unregistered group class");
}

std::vector<Subgroup> normal_subgroups(const GroupPtr& g) {
  const Group& G = *g;
  // Conjugacy class representatives.
  std::vector<Elem> reps;
  {
    std::vector<bool> seen(G.order(), false);
    for (Elem x = 1; x < G.order(); ++x) {
      if (seen[x]) continue;
      reps.push_back(x);
      std::vector<Elem> orbit{x};
      seen[x] = true;
      for (std::size_t i = 0; i < orbit.size(); ++i) {
        for (Elem s : G.generator_ids()) {
          Elem y = G.conj(orbit[i], s);
          if (!seen[y]) {
            seen[y] = true;
            orbit.push_back(y);
          }
        }
      }
    }
  }

  std::vector<Subgroup> principal;
  std::unordered_set<Mask> principal_seen;
  for (Elem x : reps) {
    const Elem one[] = {x};
    Subgroup n = normal_closure_of(g, one);
    if (principal_seen.insert(n.mask()).second) principal.push_back(std::move(n));
  }

  std::vector<Subgroup> all{Subgroup::trivial(g)};
  std::unordered_set<Mask> seen{all.front().mask()};
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const auto& p : principal) {
      if (p.is_subgroup_of(all[i])) continue;
      Subgroup next = join(all[i], p);
      if (seen.insert(next.mask()).second) all.push_back(std::move(next));
    }
  }
  std::sort(all.begin(), all.end(), sorted_before);
  return all;
}

NormalSection make_section(const GroupPtr& g, const Subgroup& lower, const Subgroup& upper) {
  if (!is_normal(g, lower) || !is_normal(g, upper)) {
    throw Error(ErrorCode::kNotNormal, "section endpoints must be normal");
  }
  if (!lower.is_subgroup_of(upper)) {
    throw Error(ErrorCode::kNotContained, "section lower term is not contained in upper term");
  }
  return {lower, upper};
}

Subgroup section_centralizer(const GroupPtr& g, const Subgroup& lower, const Subgroup& upper) {
  const auto gens = generators_of(upper);
  Mask out(g->order());
  for (Elem x = 0; x < g->order(); ++x) {
    bool ok = true;
    for (Elem h : gens) {
      if (!lower.contains(g->commutator(x, h))) {
        ok = false;
        break;
      }
    }
    if (ok) out.set(x);
  }
  return Subgroup(g, std::move(out));
}

ChiefFactor make_chief_factor(const GroupPtr& g, const Subgroup& lower, const Subgroup& upper) {
  make_section(g, lower, upper);
  return {lower, upper, section_centralizer(g, lower, upper)};
}

std::vector<ChiefFactor> chief_series_between(const GroupPtr& g, const Subgroup& lower,
                                              const Subgroup& upper, TieBreak tie,
                                              const std::vector<Subgroup>* normals) {
  require_member_of(g, lower);
  require_member_of(g, upper);
  make_section(g, lower, upper);
  std::vector<Subgroup> computed;
  if (normals == nullptr) {
    computed = normal_subgroups(g);
    normals = &computed;
  }

  std::vector<ChiefFactor> out;
  Subgroup current = lower;
  while (current != upper) {
    std::vector<const Subgroup*> candidates;
    for (const auto& n : *normals) {
      if (n.order() > current.order() && current.is_subgroup_of(n) && n.is_subgroup_of(upper)) {
        candidates.push_back(&n);
      }
    }
    std::vector<const Subgroup*> minimal;
    for (const Subgroup* c : candidates) {
      bool is_min = std::none_of(candidates.begin(), candidates.end(), [&](const Subgroup* d) {
        return d != c && d->order() < c->order() && d->is_subgroup_of(*c);
      });
      if (is_min) minimal.push_back(c);
    }
    auto by_mask = [](const Subgroup* a, const Subgroup* b) {
      return canonical_less(a->mask(), b->mask());
    };
    const Subgroup* pick = tie == TieBreak::kCanonical
                               ? *std::min_element(minimal.begin(), minimal.end(), by_mask)
                               : *std::max_element(minimal.begin(), minimal.end(), by_mask);
    out.push_back({current, *pick, section_centralizer(g, current, *pick)});
    current = *pick;
  }
  return out;
}

namespace {

// Cosets of K inside H, numbered by smallest element.
struct CosetTable {
  std::vector<Elem> label;  // indexed by element of G; -1 outside H
  std::vector<Elem> rep;

  CosetTable(const Group& g, const Subgroup& lower, const Subgroup& upper)
      : label(g.order(), static_cast<Elem>(-1)) {
    const auto k_elems = lower.elements();
    for (Elem h : upper.elements()) {
      if (label[h] != static_cast<Elem>(-1)) continue;
      const auto id = static_cast<Elem>(rep.size());
      rep.push_back(h);
      for (Elem k : k_elems) label[g.mul(h, k)] = id;
    }
  }

  std::size_t size() const { return rep.size(); }
};

bool try_g_map(const Group& G, const CosetTable& a, const CosetTable& b, Elem v, Elem w) {
  constexpr Elem kUnset = static_cast<Elem>(-1);
  auto mul_a = [&](Elem x, Elem y) { return a.label[G.mul(a.rep[x], a.rep[y])]; };
  auto mul_b = [&](Elem x, Elem y) { return b.label[G.mul(b.rep[x], b.rep[y])]; };
  auto conj_a = [&](Elem x, Elem s) { return a.label[G.conj(a.rep[x], s)]; };
  auto conj_b = [&](Elem x, Elem s) { return b.label[G.conj(b.rep[x], s)]; };

  // Orbit of v under conjugation, paired with the orbit of w.
  std::vector<Elem> psi(a.size(), kUnset);
  std::vector<Elem> orbit{v};
  psi[v] = w;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (Elem s : G.generator_ids()) {
      const Elem x = conj_a(orbit[i], s);
      const Elem y = conj_b(psi[orbit[i]], s);
      if (psi[x] == kUnset) {
        psi[x] = y;
        orbit.push_back(x);
      } else if (psi[x] != y) {
        return false;
      }
    }
  }

  std::vector<Elem> phi(a.size(), kUnset);
  std::vector<bool> used(b.size(), false);
  phi[0] = 0;
  used[0] = true;
  std::vector<Elem> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Elem x = queue[i];
    for (Elem s : orbit) {
      const Elem xs = mul_a(x, s);
      const Elem val = mul_b(phi[x], psi[s]);
      if (phi[xs] == kUnset) {
        if (used[val]) return false;
        used[val] = true;
        phi[xs] = val;
        queue.push_back(xs);
      } else if (phi[xs] != val) {
        return false;
      }
    }
  }
  if (queue.size() != a.size()) {
    throw std::invalid_argument("section is not generated by one G-orbit; not a chief factor");
  }
  for (Elem x = 0; x < a.size(); ++x) {
    for (Elem s : G.generator_ids()) {
      if (phi[conj_a(x, s)] != conj_b(phi[x], s)) return false;
    }
  }
  return true;
}

}  // namespace

bool g_isomorphic(const GroupPtr& g, const ChiefFactor& a, const ChiefFactor& b,
                  const Limits& limits) {
  require_member_of(g, a.upper);
  require_member_of(g, b.upper);
  if (a.order() != b.order()) return false;
  if (a.order() > limits.g_isomorphism_cap) {
    throw Error(ErrorCode::kSearchCapExceeded, "chief factor of order " +
                                                   std::to_string(a.order()) +
                                                   " above G-isomorphism cap");
  }
  if (a.order() == 1) return true;
  const Group& G = *g;
  const CosetTable ta(G, a.lower, a.upper);
  const CosetTable tb(G, b.lower, b.upper);

  auto coset_order = [&](const CosetTable& t, Elem x) {
    std::size_t k = 1;
    for (Elem y = x; y != 0; y = t.label[G.mul(t.rep[y], t.rep[x])]) ++k;
    return k;
  };
  const Elem v = 1;
  const std::size_t v_order = coset_order(ta, v);
  for (Elem w = 1; w < tb.size(); ++w) {
    if (coset_order(tb, w) != v_order) continue;
    if (try_g_map(G, ta, tb, v, w)) return true;
  }
  return false;
}

SectionGroup section_group(const Subgroup& lower, const Subgroup& upper) {
  Embedding up = subgroup_as_group(upper);
  Mask inner(up.group->order());
  for (Elem i = 0; i < up.to_parent.size(); ++i) {
    if (lower.contains(up.to_parent[i])) inner.set(i);
  }
  Quotient q = quotient(up.group, Subgroup(up.group, std::move(inner)));
  return {std::move(up), std::move(q)};
}

GroupPtr factor_semidirect(const GroupPtr& g, const ChiefFactor& f, const Limits& limits) {
  require_member_of(g, f.upper);
  const Group& G = *g;
  SectionGroup sec = section_group(f.lower, f.upper);
  Quotient top = quotient(g, f.centralizer);
  const GroupPtr& n = sec.quotient.group;
  const GroupPtr& h = top.group;
  if (n->order() * h->order() > limits.max_order) {
    throw Error(ErrorCode::kOrderCapExceeded, "factor semidirect product exceeds order cap");
  }

  std::vector<Elem> upper_index(G.order(), static_cast<Elem>(-1));
  for (Elem i = 0; i < sec.upper.to_parent.size(); ++i) upper_index[sec.upper.to_parent[i]] = i;

  constexpr Elem kUnset = static_cast<Elem>(-1);
  std::vector<Elem> n_rep(n->order(), kUnset);  // element of G over each element of H/K
  for (Elem i = 0; i < sec.upper.to_parent.size(); ++i) {
    Elem q = sec.quotient.projection(i);
    if (n_rep[q] == kUnset) n_rep[q] = sec.upper.to_parent[i];
  }
  std::vector<Elem> h_rep(h->order(), kUnset);
  for (Elem x = 0; x < G.order(); ++x) {
    Elem q = top.projection(x);
    if (h_rep[q] == kUnset) h_rep[q] = x;
  }

  Action action;
  action.images.assign(h->order(), std::vector<Elem>(n->order()));
  for (Elem q = 0; q < h->order(); ++q) {
    const Elem x = h_rep[q];
    bool identity = true;
    for (Elem m = 0; m < n->order(); ++m) {
      const Elem conj = G.mul(G.mul(x, n_rep[m]), G.inv(x));
      const Elem image = sec.quotient.projection(upper_index[conj]);
      action.images[q][m] = image;
      identity = identity && image == m;
    }
    if (identity && q != Group::identity()) {
      throw std::logic_error("G/C_G(H/K) does not act faithfully on H/K");
    }
  }
  return semidirect_product(n, h, action, limits);
}

bool is_f_central(const GroupPtr& g, const ChiefFactor& f, GroupClass c, const Limits& limits) {
  return is_in_class(factor_semidirect(g, f, limits), c);
}

bool is_central_factor(const GroupPtr& g, const ChiefFactor& f) {
  require_member_of(g, f.upper);
  return f.centralizer.is_whole();
}

Subgroup hypercenter_from_chief_factors(const GroupPtr& g) {
  const auto normals = normal_subgroups(g);
  const Subgroup one = Subgroup::trivial(g);
  const Subgroup* best = &normals.front();
  for (const auto& z : normals) {
    const auto series = chief_series_between(g, one, z, TieBreak::kCanonical, &normals);
    bool all_central = std::all_of(series.begin(), series.end(),
                                   [&](const ChiefFactor& f) { return is_central_factor(g, f); });
    if (all_central && z.order() > best->order()) best = &z;
  }
  return *best;
}

}  // namespace sublat
