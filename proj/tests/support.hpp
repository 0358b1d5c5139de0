#pragma once

// Shared fixtures and brute-force oracles. The oracles work on Permutation
// values directly and never call the library's subgroup machinery, so they
// can stand as an independent reference.

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <vector>

#include "sublat/checks.hpp"
#include "sublat/corpus.hpp"

namespace sublat::testing {

inline Permutation P(std::size_t degree, std::vector<std::vector<Point>> cycles) {
  return Permutation::from_cycles(degree, cycles);
}

inline Elem E(const Group& g, const Permutation& p) { return g.find(p).value(); }

inline Subgroup S(const GroupPtr& g, std::vector<Permutation> gens) {
  std::vector<Elem> ids;
  for (const auto& p : gens) ids.push_back(E(*g, p));
  return generate_subgroup(g, ids);
}

inline Subgroup from_set(const GroupPtr& g, const std::set<Permutation>& elems) {
  Mask m(g->order());
  for (const auto& p : elems) m.set(E(*g, p));
  return Subgroup(g, std::move(m));
}

inline std::set<Permutation> as_set(const Subgroup& s) {
  std::set<Permutation> out;
  for (Elem e : s.elements()) out.insert(s.parent().element(e));
  return out;
}

/// Naive closure under composition.
inline std::set<Permutation> brute_closure(std::size_t degree, const std::vector<Permutation>& gens) {
  std::set<Permutation> out{Permutation::identity(degree)};
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      for (const auto& s : gens) {
        Permutation y = x * s;
        if (out.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

/// Every subgroup of a group of order n is generated by at most floor(log2 n)
/// elements (each new generator at least doubles the order), so closing all
/// element subsets up to that size finds every subgroup.
inline std::set<std::set<Permutation>> brute_subgroups(const Group& g) {
  const auto elems = g.elements();
  const std::size_t n = elems.size();
  const std::size_t k = n <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(n) - 1);
  std::set<std::set<Permutation>> out;
  out.insert(brute_closure(g.degree(), {}));
  std::vector<std::size_t> idx;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (!idx.empty()) {
      std::vector<Permutation> gens;
      for (std::size_t i : idx) gens.push_back(elems[i]);
      out.insert(brute_closure(g.degree(), gens));
    }
    if (idx.size() == k) return;
    for (std::size_t i = start; i < n; ++i) {
      idx.push_back(i);
      self(self, i + 1);
      idx.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

inline bool brute_is_normal(const Group& g, const std::set<Permutation>& a) {
  for (const auto& x : g.elements()) {
    for (const auto& y : a) {
      if (!a.count(x.inverse() * y * x)) return false;
    }
  }
  return true;
}

/// Intersection of all conjugates.
inline std::set<Permutation> brute_core(const Group& g, const std::set<Permutation>& a) {
  std::set<Permutation> out = a;
  for (const auto& x : g.elements()) {
    std::set<Permutation> keep;
    for (const auto& y : out) {
      if (a.count(x * y * x.inverse())) keep.insert(y);
    }
    out = std::move(keep);
  }
  return out;
}

/// Closure of every conjugate of every element.
inline std::set<Permutation> brute_normal_closure(const Group& g, const std::set<Permutation>& a) {
  std::vector<Permutation> gens;
  for (const auto& x : g.elements()) {
    for (const auto& y : a) gens.push_back(x.inverse() * y * x);
  }
  return brute_closure(g.degree(), gens);
}

/// <[a, b] : a in A, b in B>
inline std::set<Permutation> brute_commutators(std::size_t degree, const std::set<Permutation>& a,
                                               const std::set<Permutation>& b) {
  std::vector<Permutation> gens;
  for (const auto& x : a) {
    for (const auto& y : b) gens.push_back(x.inverse() * y.inverse() * x * y);
  }
  return brute_closure(degree, gens);
}

inline std::set<Permutation> brute_center(const Group& g) {
  std::set<Permutation> out;
  for (const auto& x : g.elements()) {
    bool central = true;
    for (const auto& y : g.elements()) central = central && x * y == y * x;
    if (central) out.insert(x);
  }
  return out;
}

inline std::vector<GroupPtr> small_corpus(std::size_t max_order) {
  auto all = corpus();
  std::erase_if(all, [&](const GroupPtr& g) { return g->order() > max_order; });
  return all;
}

inline Permutation random_permutation(std::mt19937& rng, std::size_t degree) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

/// Random permutation groups of degree <= 6 with at most `max_order` elements.
inline std::vector<GroupPtr> random_groups(std::uint32_t seed, std::size_t count,
                                           std::size_t max_order) {
  std::mt19937 rng(seed);
  std::vector<GroupPtr> out;
  while (out.size() < count) {
    const std::size_t degree = 2 + rng() % 5;
    const std::size_t ngens = 1 + rng() % 2;
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < ngens; ++i) gens.push_back(random_permutation(rng, degree));
    Limits limits;
    limits.max_order = max_order;
    try {
      out.push_back(group_generate(degree, gens, "R" + std::to_string(out.size()), limits));
    } catch (const Error&) {
    }
  }
  return out;
}

}  // namespace sublat::testing
