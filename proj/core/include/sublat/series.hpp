#pragma once

#include <optional>
#include <vector>

#include "sublat/group_class.hpp"
#include "sublat/operations.hpp"
#include "sublat/subgroup.hpp"

namespace sublat {

enum class SeriesKind { kDerived, kLowerCentral, kUpperCentral };

/// Derived and lower central series descend from G, the upper central series
/// ascends from 1; each stops at the first repeated term.
std::vector<Subgroup> standard_series(const GroupPtr& g, SeriesKind kind);

Subgroup center(const GroupPtr& g);

/// Last term of the upper central series.
Subgroup hypercenter(const GroupPtr& g);

bool is_in_class(const GroupPtr& g, GroupClass c);

/// All normal subgroups, built as products of normal closures of conjugacy
/// classes. Sorted by order, then `canonical_less`.
std::vector<Subgroup> normal_subgroups(const GroupPtr& g);

/// T/L with L <= T both normal in the parent.
struct NormalSection {
  Subgroup lower;
  Subgroup upper;
};

/// Throws NotNormal or NotContained.
NormalSection make_section(const GroupPtr& g, const Subgroup& lower, const Subgroup& upper);

/// A chief factor H/K with its centralizer C_G(H/K) = {g : [g,h] in K for all h in H}.
struct ChiefFactor {
  Subgroup lower;  // K
  Subgroup upper;  // H
  Subgroup centralizer;

  std::size_t order() const { return upper.order() / lower.order(); }
  bool is_abelian() const { return upper.is_subgroup_of(centralizer); }
};

Subgroup section_centralizer(const GroupPtr& g, const Subgroup& lower, const Subgroup& upper);

/// Wraps K < H as a chief factor. Throws NotNormal or NotContained; does not
/// re-check that nothing normal lies strictly between.
ChiefFactor make_chief_factor(const GroupPtr& g, const Subgroup& lower, const Subgroup& upper);

enum class TieBreak { kCanonical, kReversed };

/// A chief series from `lower` up to `upper`: at every step take the first
/// (or, with kReversed, last) minimal normal subgroup strictly above the
/// current term in `canonical_less` order. Empty when lower == upper.
/// `normals`, if given, must be `normal_subgroups(g)`.
std::vector<ChiefFactor> chief_series_between(const GroupPtr& g, const Subgroup& lower,
                                              const Subgroup& upper,
                                              TieBreak tie = TieBreak::kCanonical,
                                              const std::vector<Subgroup>* normals = nullptr);

/// G-isomorphism of two chief factors, by exhaustive search: a
/// G-equivariant map is fixed by the image of one nontrivial element, since
/// that element's G-orbit generates the factor. Throws SearchCapExceeded
/// above `limits.g_isomorphism_cap`.
bool g_isomorphic(const GroupPtr& g, const ChiefFactor& a, const ChiefFactor& b,
                  const Limits& limits = {});

/// H/K realised as a group, with the projection from H (as a group).
struct SectionGroup {
  Embedding upper;
  Quotient quotient;
};

SectionGroup section_group(const Subgroup& lower, const Subgroup& upper);

/// (H/K) x| (G/C_G(H/K)) with G/C acting by conjugation.
GroupPtr factor_semidirect(const GroupPtr& g, const ChiefFactor& f, const Limits& limits = {});

bool is_f_central(const GroupPtr& g, const ChiefFactor& f, GroupClass c,
                  const Limits& limits = {});

/// C_G(H/K) = G.
bool is_central_factor(const GroupPtr& g, const ChiefFactor& f);

/// Largest normal subgroup Z such that every chief factor of G below Z is
/// central; agrees with `hypercenter`, by a different route.
Subgroup hypercenter_from_chief_factors(const GroupPtr& g);

}  // namespace sublat
