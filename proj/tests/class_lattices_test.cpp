#include <gtest/gtest.h>

#include <numeric>

#include "sublat/arith.hpp"
#include "sublat/class_lattices.hpp"
#include "support.hpp"

using namespace sublat;
using namespace sublat::testing;

namespace {

Subgroup V4in(const GroupPtr& s4) { return S(s4, {P(4, {{0, 1}, {2, 3}}), P(4, {{0, 2}, {1, 3}})}); }

bool member(Workspace& ws, const LatticeSpec& spec, const Subgroup& a) {
  const auto ms = lattice_members(ws, spec);
  return std::count(ms.begin(), ms.end(), ws.lattice().index_of(a)) == 1;
}

// Subnormal subgroups as the smallest set containing G and closed under
// taking normal subgroups of members.
std::set<std::size_t> subnormal_oracle(const SubgroupLattice& lat) {
  std::set<std::size_t> out{lat.whole_index()};
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t b : std::set<std::size_t>(out)) {
      for (std::size_t a = 0; a < lat.size(); ++a) {
        if (out.count(a) || !lat.contained(a, b)) continue;
        bool normal = true;
        for (Elem x : lat[b].elements()) {
          for (Elem y : lat[a].elements()) normal = normal && lat[a].contains(lat.group()->conj(y, x));
        }
        if (normal) grew = out.insert(a).second || grew;
      }
    }
  }
  return out;
}

}  // namespace

TEST(GroupClasses, ParseAndFlags) {
  for (GroupClass c : kAllClasses) EXPECT_EQ(parse_group_class(to_string(c)), c);
  EXPECT_THROW(parse_group_class("metabelian"), Error);
  EXPECT_FALSE(flags(GroupClass::kAbelian).saturated);
  EXPECT_FALSE(flags(GroupClass::kSupersoluble).fitting);
  EXPECT_TRUE(flags(GroupClass::kSoluble).fitting);
  EXPECT_EQ(parse_delta("central"), DeltaSpec::central());
  EXPECT_EQ(parse_delta("f-central:soluble"), DeltaSpec::f_central(GroupClass::kSoluble));
  EXPECT_EQ(parse_delta("member:nilpotent"), DeltaSpec::member(GroupClass::kNilpotent));
  EXPECT_THROW(parse_delta("f-central:nope"), Error);
  EXPECT_THROW(parse_delta("hypercentral"), Error);
  for (const auto& d : builtin_deltas()) EXPECT_EQ(parse_delta(to_string(d)), d);
}

TEST(Residual, Examples) {
  Workspace s3(builtin("S3"));
  EXPECT_EQ(residual(s3, GroupClass::kNilpotent), S(s3.group(), {P(3, {{0, 1, 2}})}));
  auto s4g = builtin("S4");
  Workspace s4(s4g);
  EXPECT_EQ(residual(s4, GroupClass::kNilpotent), S(s4g, {P(4, {{0, 1, 2}}), P(4, {{1, 2, 3}})}));
  for (const auto& name : {"C6", "V4", "C2^3", "C12"}) {
    Workspace ws(builtin(name));
    for (GroupClass c : kAllClasses) EXPECT_TRUE(residual(ws, c).is_trivial());
  }
}

TEST(Radical, Examples) {
  auto s4g = builtin("S4");
  Workspace s4(s4g);
  EXPECT_EQ(radical(s4, GroupClass::kNilpotent), V4in(s4g));
  EXPECT_TRUE(radical(s4, GroupClass::kSoluble).is_whole());
  Workspace a5(builtin("A5"));
  EXPECT_TRUE(radical(a5, GroupClass::kSoluble).is_trivial());
}

TEST(ResidualRadical, OrderIndependentAndFlagsHold) {
  for (const auto& g : corpus(true)) {
    Workspace ws(g);
    const auto& ns = ws.normals();
    for (GroupClass c : kAllClasses) {
      // Recompute walking the normal subgroups backwards.
      Mask res(g->order());
      res.set();
      Subgroup rad = Subgroup::trivial(g);
      for (std::size_t i = ns.size(); i-- > 0;) {
        if (is_in_class(quotient(g, ns[i]).group, c)) res &= ns[i].mask();
        if (is_in_class(subgroup_as_group(ns[i]).group, c)) rad = join(rad, ns[i]);
      }
      const auto r = residual(ws, c);
      EXPECT_EQ(r.mask(), res) << g->name();
      EXPECT_EQ(radical(ws, c), rad) << g->name();
      if (flags(c).formation) EXPECT_TRUE(is_in_class(quotient(g, r).group, c)) << g->name();
      if (flags(c).fitting) EXPECT_TRUE(is_in_class(subgroup_as_group(rad).group, c)) << g->name();
    }
  }
}

TEST(ClassFlags, SpotChecks) {
  for (const auto& g : corpus(true)) {
    Workspace ws(g);
    const auto& ns = ws.normals();
    const auto frattini = distinguished_subgroups(ws.lattice()).frattini;
    for (GroupClass c : kAllClasses) {
      const auto f = flags(c);
      const bool in = is_in_class(g, c);
      for (const auto& n : ns) {
        if (f.formation && in) EXPECT_TRUE(is_in_class(quotient(g, n).group, c)) << g->name();
        if (f.normally_hereditary && in) EXPECT_TRUE(is_in_class(subgroup_as_group(n).group, c));
      }
      if (f.saturated && residual(ws, c).is_subgroup_of(frattini)) EXPECT_TRUE(in) << g->name();
      if (f.contains_nilpotent && is_in_class(g, GroupClass::kNilpotent)) EXPECT_TRUE(in);
    }
  }
}

TEST(ClassFlags, AbelianIsNotSaturated) {
  // Q8 / Phi(Q8) is abelian while Q8 is not.
  Workspace ws(builtin("Q8"));
  const auto frattini = distinguished_subgroups(ws.lattice()).frattini;
  EXPECT_TRUE(residual(ws, GroupClass::kAbelian).is_subgroup_of(frattini));
  EXPECT_FALSE(is_in_class(ws.group(), GroupClass::kAbelian));
}

TEST(ZDelta, Examples) {
  auto s3 = builtin("S3");
  Workspace ws(s3);
  auto sec = make_section(s3, Subgroup::trivial(s3), S(s3, {P(3, {{0, 1, 2}})}));
  EXPECT_FALSE(z_delta_contains(ws, sec, DeltaSpec::central()));
  EXPECT_TRUE(z_delta_contains(ws, sec, DeltaSpec::f_central(GroupClass::kSoluble)));
  for (const auto& n : ws.normals()) {
    for (const auto& d : builtin_deltas()) EXPECT_TRUE(z_delta_contains(ws, make_section(s3, n, n), d));
  }
}

TEST(ZDelta, CentralMatchesHypercenter) {
  for (const auto& g : corpus(true)) {
    Workspace ws(g);
    const auto& lat = ws.lattice();
    for (std::size_t m = 0; m < lat.size(); ++m) {
      const bool zd = ws.ldelta_member(m, DeltaSpec::central());
      const auto& closure = ws.normals()[ws.closure_index(m)];
      auto q = quotient(g, ws.normals()[ws.core_index(m)]);
      auto z = hypercenter(q.group);
      bool inside = true;
      for (Elem x : closure.elements()) inside = inside && z.contains(q.projection(x));
      EXPECT_EQ(zd, inside) << g->name() << " " << describe(lat[m]);
    }
  }
}

TEST(LatticeMembers, Examples) {
  auto s4 = builtin("S4");
  Workspace ws(s4);
  auto dbl = S(s4, {P(4, {{0, 1}, {2, 3}})});
  auto transposition = S(s4, {P(4, {{0, 1}})});
  for (const auto& n : ws.normals()) EXPECT_TRUE(member(ws, GroupClass::kNilpotent, n));
  EXPECT_TRUE(member(ws, GroupClass::kNilpotent, dbl));
  EXPECT_FALSE(member(ws, GroupClass::kNilpotent, transposition));
  EXPECT_FALSE(member(ws, DeltaSpec::central(), dbl));

  for (const auto& name : {"C12", "V4", "C2^3"}) {
    Workspace ab(builtin(name));
    const std::size_t n = ab.lattice().size();
    for (GroupClass c : kAllClasses) EXPECT_EQ(lattice_members(ab, c).size(), n);
    for (const auto& d : builtin_deltas()) EXPECT_EQ(lattice_members(ab, d).size(), n);
  }
}

TEST(LatticeMembers, WholeGroupAlwaysMember) {
  for (const auto& g : corpus(true)) {
    Workspace ws(g);
    const std::size_t top = ws.lattice().whole_index();
    for (GroupClass c : kAllClasses) EXPECT_TRUE(ws.lf_member(top, c));
    for (const auto& d : builtin_deltas()) EXPECT_TRUE(ws.ldelta_member(top, d));
  }
}

TEST(LatticeMembers, DivergenceDiagnostic) {
  // A4/1 has only abelian chief factors but is not abelian. For the soluble
  // class the two readings always agree.
  Workspace a4(builtin("A4"));
  EXPECT_FALSE(lf_divergence(a4, GroupClass::kAbelian).empty());
  for (const auto& g : corpus(true)) {
    Workspace ws(g);
    EXPECT_TRUE(lf_divergence(ws, GroupClass::kSoluble).empty()) << g->name();
  }
}

TEST(ClosedSublattice, Examples) {
  auto s4 = builtin("S4");
  Workspace ws(s4);
  const auto& lat = ws.lattice();
  EXPECT_TRUE(is_closed_sublattice(lat, lattice_members(ws, DeltaSpec::central()), SublatticeMode::kBoth).closed);

  auto s3 = builtin("S3");
  Workspace w3(s3);
  const auto& l3 = w3.lattice();
  std::vector<std::size_t> two = {l3.index_of(S(s3, {P(3, {{0, 1}})})), l3.index_of(S(s3, {P(3, {{0, 2}})}))};
  auto res = is_closed_sublattice(l3, two, SublatticeMode::kJoin);
  EXPECT_FALSE(res.closed);
  ASSERT_TRUE(res.witness);
  std::vector<std::size_t> all(l3.size());
  std::iota(all.begin(), all.end(), 0);
  EXPECT_TRUE(is_closed_sublattice(l3, all, SublatticeMode::kBoth).closed);
}

TEST(Identities, CoreOfMeetAndClosureOfJoin) {
  for (const auto& g : corpus(true)) {
    Workspace ws(g);
    const auto& lat = ws.lattice();
    const auto& ns = ws.normals();
    for (std::size_t a = 0; a < lat.size(); ++a) {
      for (std::size_t b = a; b < lat.size(); ++b) {
        const auto& ca = ns[ws.core_index(a)];
        const auto& cb = ns[ws.core_index(b)];
        EXPECT_EQ(ns[ws.core_index(lat.meet(a, b))], intersect(ca, cb));
        const auto& na = ns[ws.closure_index(a)];
        const auto& nb = ns[ws.closure_index(b)];
        EXPECT_EQ(ns[ws.closure_index(lat.join(a, b))].mask(), product_set(g, na, nb));
      }
    }
  }
}

TEST(Subnormal, MatchesChainOracle) {
  for (const auto& g : corpus(true)) {
    Workspace ws(g);
    const auto& lat = ws.lattice();
    const auto oracle = subnormal_oracle(lat);
    for (std::size_t m = 0; m < lat.size(); ++m) {
      EXPECT_EQ(is_subnormal(g, lat[m]), oracle.count(m) == 1) << g->name() << " " << describe(lat[m]);
    }
  }
}

TEST(Sylow, DirectAgreesWithLattice) {
  for (const auto& g : corpus(true)) {
    Workspace ws(g);
    for (std::size_t p : {2, 3, 5, 7, 11}) {
      const auto a = sylow_subgroups(ws.lattice(), p);
      const auto b = sylow_subgroups_direct(g, p);
      ASSERT_EQ(a.size(), b.size()) << g->name() << " p=" << p;
      for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
    }
  }
}

TEST(Permutability, Examples) {
  auto d8 = builtin("D8");
  Workspace wd(d8);
  auto s = permutability_profile(wd, S(d8, {P(4, {{1, 3}})}));
  EXPECT_TRUE(s.subnormal);
  EXPECT_TRUE(*s.s_permutable);
  EXPECT_FALSE(*s.quasinormal);
  EXPECT_FALSE(s.normal);

  auto s4 = builtin("S4");
  Workspace w4(s4);
  auto dbl = permutability_profile(w4, S(s4, {P(4, {{0, 1}, {2, 3}})}));
  EXPECT_TRUE(dbl.subnormal);
  EXPECT_FALSE(*dbl.s_permutable);
  EXPECT_FALSE(*dbl.quasinormal);

  Workspace wc(builtin("C12"));
  for (const auto& a : wc.lattice().members()) {
    auto prof = permutability_profile(wc, a);
    EXPECT_TRUE(prof.normal && prof.subnormal && *prof.s_permutable && *prof.quasinormal && *prof.modular);
  }
}

TEST(Permutability, ImplicationChain) {
  for (const auto& g : corpus(true)) {
    Workspace ws(g);
    for (const auto& a : ws.lattice().members()) {
      auto prof = permutability_profile(ws, a);
      EXPECT_TRUE(!prof.normal || *prof.quasinormal);
      EXPECT_TRUE(!*prof.quasinormal || *prof.s_permutable);
      EXPECT_TRUE(!*prof.quasinormal || *prof.modular);
      EXPECT_TRUE(!prof.normal || prof.subnormal);
    }
  }
}

TEST(Permutability, ProfileAboveLatticeCap) {
  Limits small;
  small.lattice_order_cap = 20;
  auto s4 = builtin("S4");
  Workspace ws(s4, small);
  auto prof = permutability_profile(ws, V4in(s4));
  EXPECT_TRUE(prof.normal);
  EXPECT_TRUE(*prof.s_permutable);
  EXPECT_FALSE(prof.quasinormal.has_value());
  EXPECT_FALSE(prof.modular.has_value());
}

TEST(Classify, Examples) {
  const std::vector<std::pair<std::string, TLabel>> expected = {
      {"S3", TLabel::kT}, {"Q8", TLabel::kT},    {"D8", TLabel::kPST},
      {"S4", TLabel::kNone}, {"A4", TLabel::kNone}, {"M16", TLabel::kPT},
      {"C12", TLabel::kT}, {"A5", TLabel::kT},
  };
  for (const auto& [name, label] : expected) {
    Workspace ws(builtin(name));
    EXPECT_EQ(classify_t_pt_pst(ws), label) << name;
  }
}

TEST(PowerAutomorphisms, Examples) {
  auto s3 = builtin("S3");
  EXPECT_TRUE(induces_power_automorphisms(s3, S(s3, {P(3, {{0, 1, 2}})})));
  auto s4 = builtin("S4");
  EXPECT_FALSE(induces_power_automorphisms(s4, S(s4, {P(4, {{0, 1, 2}}), P(4, {{1, 2, 3}})})));
  auto q8 = builtin("Q8");
  EXPECT_TRUE(induces_power_automorphisms(q8, Subgroup::whole(q8)));
  try {
    induces_power_automorphisms(s3, S(s3, {P(3, {{0, 1}})}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotNormal);
  }
  // Modulo V4 the quotient A4/V4 is cyclic of order 3 and S4 inverts it.
  EXPECT_TRUE(induces_power_automorphisms(s4, S(s4, {P(4, {{0, 1, 2}}), P(4, {{1, 2, 3}})}), V4in(s4)));
}

TEST(PowerAutomorphisms, EquivalentToInvariantSubgroups) {
  for (const auto& g : corpus()) {
    Workspace ws(g);
    const auto& lat = ws.lattice();
    for (const auto& d : ws.normals()) {
      bool invariant = true;
      for (const auto& a : lat.members()) {
        if (a.is_subgroup_of(d)) invariant = invariant && is_normal(g, a);
      }
      EXPECT_EQ(induces_power_automorphisms(g, d), invariant) << g->name() << " " << describe(d);
    }
  }
}

TEST(Hall, Examples) {
  auto s3 = builtin("S3");
  EXPECT_TRUE(is_hall_in(s3, S(s3, {P(3, {{0, 1, 2}})})));
  auto s4 = builtin("S4");
  EXPECT_FALSE(is_hall_in(s4, S(s4, {P(4, {{0, 1, 2}}), P(4, {{1, 2, 3}})})));
  EXPECT_TRUE(is_hall_in(s4, Subgroup::trivial(s4)));
}

TEST(Iwasawa, Examples) {
  Workspace s3(builtin("S3"));
  EXPECT_TRUE(iwasawa_sylow_condition(s3));
  Workspace d8(builtin("D8"));
  EXPECT_FALSE(iwasawa_sylow_condition(d8));
  Workspace q8(builtin("Q8"));
  EXPECT_TRUE(iwasawa_sylow_condition(q8));
}

TEST(Iwasawa, EveryConjugateSylowAgrees) {
  for (const auto& g : corpus(true)) {
    Workspace ws(g);
    const auto& lat = ws.lattice();
    for (std::size_t p : prime_divisors(g->order())) {
      std::set<bool> verdicts;
      for (const auto& sylow : ws.sylows(p)) {
        bool ok = true;
        for (const auto& a : lat.members()) {
          if (!a.is_subgroup_of(sylow)) continue;
          for (const auto& b : lat.members()) {
            if (b.is_subgroup_of(sylow)) ok = ok && permutes(g, a, b);
          }
        }
        verdicts.insert(ok);
      }
      EXPECT_EQ(verdicts.size(), 1u) << g->name();
    }
  }
}

TEST(Frattini, OfSubgroups) {
  auto s4 = builtin("S4");
  Workspace ws(s4);
  EXPECT_TRUE(frattini_of(ws, V4in(s4)).is_trivial());
  EXPECT_EQ(frattini_of(ws, Subgroup::whole(s4)), distinguished_subgroups(ws.lattice()).frattini);
  auto c8 = builtin("C8");
  Workspace w8(c8);
  EXPECT_EQ(frattini_of(w8, Subgroup::whole(c8)).order(), 4u);
  EXPECT_TRUE(frattini_of(w8, Subgroup::trivial(c8)).is_trivial());
}
