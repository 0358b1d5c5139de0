#pragma once

#include <optional>
#include <vector>

#include "sublat/group.hpp"
#include "sublat/subgroup.hpp"

namespace sublat {

/// {ab : a in A, b in B}. Checks |AB| |A n B| = |A| |B|.
Mask product_set(const GroupPtr& g, const Subgroup& a, const Subgroup& b);

/// AB == BA, equivalently AB is a subgroup.
bool permutes(const GroupPtr& g, const Subgroup& a, const Subgroup& b);

bool is_normal(const GroupPtr& g, const Subgroup& a);

/// Smallest normal subgroup of `g` containing `a`.
Subgroup normal_closure(const GroupPtr& g, const Subgroup& a);

/// Smallest subgroup containing `a` and normalised by `ambient`; both must
/// be subgroups of `g`.
Subgroup normal_closure_in(const GroupPtr& g, const Subgroup& ambient, const Subgroup& a);

/// Normal closure of an element set.
Subgroup normal_closure_of(const GroupPtr& g, std::span<const Elem> elems);

/// Largest normal subgroup of `g` contained in `a`.
Subgroup core(const GroupPtr& g, const Subgroup& a);

enum class CentralizerMode { kCentralize, kNormalize };

Subgroup centralizer_normalizer(const GroupPtr& g, const Subgroup& a, CentralizerMode mode);

struct Quotient {
  GroupPtr group;
  Morphism projection;
};

/// G/N realised on the right cosets of N (degree |G:N|). Throws NotNormal.
Quotient quotient(const GroupPtr& g, const Subgroup& n);

struct Embedding {
  GroupPtr group;            // the subgroup as a group in its own right
  std::vector<Elem> to_parent;  // element index -> parent element index
};

/// Re-wraps a subgroup as a standalone group on the same points. Element
/// order is inherited from the parent, so `to_parent` is increasing.
Embedding subgroup_as_group(const Subgroup& a);

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, const Limits& limits = {});

/// Left action of H on N by automorphisms: `images[h][n]` is the image of
/// n under the automorphism attached to h.
struct Action {
  std::vector<std::vector<Elem>> images;

  static Action trivial(const Group& n, const Group& h);
};

/// N x| H with (n1,h1)(n2,h2) = (n1 * h1(n2), h1 h2). Realised faithfully on
/// |N| + |H| points: N acts on itself by affine maps x -> n h(x) and H acts on
/// itself by left multiplication. Throws InvalidAction and OrderCapExceeded.
GroupPtr semidirect_product(const GroupPtr& n, const GroupPtr& h, const Action& action,
                            const Limits& limits = {});

/// Returns an isomorphism a -> b as an element map if one exists. Throws
/// SearchCapExceeded if both orders are above `limits.isomorphism_cap`.
std::optional<std::vector<Elem>> find_isomorphism(const Group& a, const Group& b,
                                                  const Limits& limits = {});

bool is_isomorphic(const Group& a, const Group& b, const Limits& limits = {});

}  // namespace sublat
