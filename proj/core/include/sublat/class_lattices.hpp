#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "sublat/group_class.hpp"
#include "sublat/lattice.hpp"
#include "sublat/series.hpp"

namespace sublat {

/// A predicate on chief factors that is invariant under G-isomorphism.
struct DeltaSpec {
  enum class Kind { kCentral, kFCentral, kFMember };
  Kind kind = Kind::kCentral;
  GroupClass cls = GroupClass::kNilpotent;  // ignored for kCentral

  static DeltaSpec central() { return {Kind::kCentral, GroupClass::kNilpotent}; }
  static DeltaSpec f_central(GroupClass c) { return {Kind::kFCentral, c}; }
  static DeltaSpec member(GroupClass c) { return {Kind::kFMember, c}; }

  friend auto operator<=>(const DeltaSpec&, const DeltaSpec&) = default;
};

/// "central", "f-central:<class>", "member:<class>"
std::string to_string(const DeltaSpec& d);
DeltaSpec parse_delta(std::string_view text);

/// CENTRAL plus F_CENTRAL for every registered class.
std::vector<DeltaSpec> builtin_deltas();

/// Per-group cache of the structures the lattice predicates share: the
/// subgroup lattice, normal subgroups, normal closures and cores of lattice
/// members, chief series and section class membership. Not thread-safe; use
/// one workspace per thread.
class Workspace {
 public:
  explicit Workspace(GroupPtr g, Limits limits = {});

  const GroupPtr& group() const noexcept { return group_; }
  const Limits& limits() const noexcept { return limits_; }

  /// Throws the lattice cap errors on first use.
  const SubgroupLattice& lattice();
  bool lattice_available();

  const std::vector<Subgroup>& normals();
  std::size_t normal_index(const Subgroup& n);

  /// Normal indices of A^G and A_G for lattice member `m`.
  std::size_t closure_index(std::size_t m);
  std::size_t core_index(std::size_t m);

  /// Chief series between two normal subgroups, by normal index.
  const std::vector<ChiefFactor>& chief_series(std::size_t lower, std::size_t upper);

  /// normals[upper] / normals[lower] lies in c.
  bool section_in_class(std::size_t lower, std::size_t upper, GroupClass c);

  /// Chief factor with normal endpoints lies in delta.
  bool in_delta(const ChiefFactor& f, const DeltaSpec& d);

  /// normals[upper] / normals[lower] <= Z_delta(G).
  bool z_delta(std::size_t lower, std::size_t upper, const DeltaSpec& d);

  /// Hypercenter of G/normals[n], pulled back to G.
  const Subgroup& hypercenter_mod(std::size_t n);

  const std::vector<Subgroup>& sylows(std::size_t p);

  bool lf_member(std::size_t m, GroupClass c);
  bool ldelta_member(std::size_t m, const DeltaSpec& d);

  bool quasinormal(std::size_t m);
  bool modular(std::size_t m);

 private:
  GroupPtr group_;
  Limits limits_;
  LatticePtr lattice_;
  std::optional<Error> lattice_error_;
  std::optional<std::vector<Subgroup>> normals_;
  std::unordered_map<Mask, std::size_t> normal_index_;
  std::vector<std::optional<std::size_t>> closure_;
  std::vector<std::optional<std::size_t>> core_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<ChiefFactor>> chief_;
  std::map<std::tuple<std::size_t, std::size_t, GroupClass>, bool> section_class_;
  std::map<std::tuple<std::size_t, std::size_t, DeltaSpec>, bool> factor_delta_;
  std::map<std::tuple<std::size_t, std::size_t, DeltaSpec>, bool> z_delta_;
  std::map<std::size_t, Subgroup> hypercenter_mod_;
  std::map<std::size_t, std::vector<Subgroup>> sylows_;
  std::map<std::pair<std::size_t, GroupClass>, bool> lf_;
  std::map<std::pair<std::size_t, DeltaSpec>, bool> ldelta_;
  std::map<std::size_t, bool> quasinormal_;
  std::map<std::size_t, bool> modular_;
};

/// Intersection of the normal N with G/N in c.
Subgroup residual(Workspace& ws, GroupClass c);

/// Product of the normal N lying in c.
Subgroup radical(Workspace& ws, GroupClass c);

/// T/L <= Z_delta(G): every chief factor between L and T lies in delta.
bool z_delta_contains(Workspace& ws, const NormalSection& section, const DeltaSpec& d);

/// Which lattice: L_F for a class, L_delta for a chief-factor predicate.
using LatticeSpec = std::variant<GroupClass, DeltaSpec>;

/// Lattice indices of the members: A with A^G/A_G in c, or A^G/A_G <= Z_delta(G).
std::vector<std::size_t> lattice_members(Workspace& ws, const LatticeSpec& spec);

/// Lattice indices where L_F(c) and L_delta(member:c) disagree.
std::vector<std::size_t> lf_divergence(Workspace& ws, GroupClass c);

enum class SublatticeMode { kMeet, kJoin, kBoth };

struct SublatticeCheck {
  bool closed = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // lattice indices
};

SublatticeCheck is_closed_sublattice(const SubgroupLattice& lattice,
                                     const std::vector<std::size_t>& members, SublatticeMode mode);

/// Subnormal iff the chain G = H_0, H_{i+1} = normal closure of A in H_i reaches A.
bool is_subnormal(const GroupPtr& g, const Subgroup& a);

/// All Sylow p-subgroups without a subgroup lattice: grow one maximal
/// p-subgroup, then take its conjugates.
std::vector<Subgroup> sylow_subgroups_direct(const GroupPtr& g, std::size_t p);

struct PermutabilityProfile {
  Subgroup subject;
  bool normal = false;
  bool subnormal = false;
  std::optional<bool> s_permutable;
  std::optional<bool> quasinormal;  // nullopt when the lattice is over its cap
  std::optional<bool> modular;
};

PermutabilityProfile permutability_profile(Workspace& ws, const Subgroup& a);

enum class TLabel { kT, kPT, kPST, kNone };

std::string_view to_string(TLabel label);

/// Strongest of T, PT, PST that G satisfies.
TLabel classify_t_pt_pst(Workspace& ws);

/// Every element of G maps every element of D (mod `modulo`, if given)
/// into the cyclic subgroup it generates. Throws NotNormal / NotContained.
bool induces_power_automorphisms(const GroupPtr& g, const Subgroup& d,
                                 const std::optional<Subgroup>& modulo = std::nullopt);

bool is_hall_in(const GroupPtr& g, const Subgroup& d);

/// Every two subgroups of every Sylow subgroup permute.
bool iwasawa_sylow_condition(Workspace& ws);

/// Frattini subgroup of a subgroup D, computed from the lattice of G.
Subgroup frattini_of(Workspace& ws, const Subgroup& d);

}  // namespace sublat
