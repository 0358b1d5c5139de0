#include "sublat/checks.hpp"

#include <map>
#include <set>
#include <sstream>

#include "sublat/arith.hpp"

namespace sublat {

namespace {

struct CheckInfo {
  CheckId id;
  std::string_view name;
  std::string_view statement;
};

constexpr std::array<CheckInfo, 15> kInfo = {{
    {CheckId::kThm11i, "THM-1.1i",
     "L_delta(G) is a sublattice for every built-in chief-factor predicate delta"},
    {CheckId::kThm11ii, "THM-1.1ii", "L_F(G) is meet-closed for normally hereditary formations"},
    {CheckId::kThm11iii, "THM-1.1iii", "L_F(G) is a sublattice for Fitting formations"},
    {CheckId::kCor12, "COR-1.2",
     "for modular A, B every chief factor between (A n B)_G and (A n B)^G is cyclic"},
    {CheckId::kCor13, "COR-1.3",
     "for quasinormal A, B: (A n B)^G/(A n B)_G <= Z_inf(G/(A n B)_G)"},
    {CheckId::kThm14i, "THM-1.4i",
     "G^F soluble and L_F = L_delta(F-central) imply G^F is an abelian Hall subgroup of odd "
     "order with power automorphisms on G^F/Phi(G^F) and cyclic chief factors below it"},
    {CheckId::kThm14ii, "THM-1.4ii",
     "G soluble and L_N = L_delta(central) imply power automorphisms on G^N"},
    {CheckId::kThm15, "THM-1.5", "G soluble: G is PST iff L_N = L_delta(central)"},
    {CheckId::kCor16, "COR-1.6",
     "G soluble and A/A_G <= Z_inf(G/A_G) for all subnormal A imply G is PST"},
    {CheckId::kCor17, "COR-1.7",
     "a soluble PT-group has an abelian normal Hall subgroup D of odd order with G/D nilpotent "
     "and power automorphisms on D"},
    {CheckId::kCor18, "COR-1.8",
     "G soluble: G is PT iff L_N = L_delta(central) and subgroups of Sylow subgroups permute"},
    {CheckId::kLem21, "LEM-2.1",
     "factor semidirect products survive quotients below K and agree on G-isomorphic factors"},
    {CheckId::kLem22, "LEM-2.2", "Z_delta containment rules for normal subgroups"},
    {CheckId::kRem31, "REM-3.1",
     "G in a formation F makes every chief factor F-central; the converse for saturated F"},
    {CheckId::kQnHyp, "QN-HYP", "A quasinormal implies A^G/A_G <= Z_inf(G/A_G)"},
}};

struct Outcome {
  bool exercised = false;
  std::optional<std::string> witness;
  std::optional<std::string> undecided;
  std::vector<std::string> notes;

  void fail(std::string w) {
    if (!witness) witness = std::move(w);
  }
  void skip(std::string why) {
    if (!undecided) undecided = std::move(why);
  }
};

CheckResult finish(const Workspace& ws, CheckId id, Outcome o) {
  CheckResult r{ws.group()->name(), id, Verdict::kPass, std::nullopt, {}};
  for (std::size_t i = 0; i < o.notes.size(); ++i) {
    if (i) r.detail += "; ";
    r.detail += o.notes[i];
  }
  if (o.witness) {
    r.verdict = Verdict::kFail;
    r.witness = std::move(o.witness);
  } else if (o.undecided) {
    r.verdict = Verdict::kUndecided;
    r.witness = std::move(o.undecided);
  } else if (!o.exercised) {
    r.verdict = Verdict::kVacuous;
  }
  return r;
}

std::string describe_factor(const Subgroup& lower, const Subgroup& upper) {
  return describe(upper) + " / " + describe(lower);
}

std::string describe_factor(const ChiefFactor& f) { return describe_factor(f.lower, f.upper); }

bool soluble(Workspace& ws) { return is_in_class(ws.group(), GroupClass::kSoluble); }

std::size_t top_normal(Workspace& ws) { return ws.normals().size() - 1; }

// (lower, upper) normal indices of every chief factor of G.
std::vector<std::pair<std::size_t, std::size_t>> chief_pairs(Workspace& ws) {
  const auto& ns = ws.normals();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t lo = 0; lo < ns.size(); ++lo) {
    for (std::size_t hi = lo + 1; hi < ns.size(); ++hi) {
      if (ns[lo].order() >= ns[hi].order() || !ns[lo].is_subgroup_of(ns[hi])) continue;
      bool cover = true;
      for (std::size_t k = lo + 1; k < hi && cover; ++k) {
        if (ns[k].order() > ns[lo].order() && ns[k].order() < ns[hi].order() &&
            ns[lo].is_subgroup_of(ns[k]) && ns[k].is_subgroup_of(ns[hi])) {
          cover = false;
        }
      }
      if (cover) out.emplace_back(lo, hi);
    }
  }
  return out;
}

bool lattices_equal(Workspace& ws, const LatticeSpec& a, const LatticeSpec& b,
                    std::string* where) {
  const auto x = lattice_members(ws, a);
  const auto y = lattice_members(ws, b);
  if (x == y) return true;
  if (where) {
    std::set<std::size_t> sx(x.begin(), x.end()), sy(y.begin(), y.end());
    for (std::size_t m = 0; m < ws.lattice().size(); ++m) {
      if (sx.count(m) != sy.count(m)) {
        *where = describe(ws.lattice()[m]);
        break;
      }
    }
  }
  return false;
}

bool is_pst_or_better(TLabel l) { return l != TLabel::kNone; }
bool is_pt_or_better(TLabel l) { return l == TLabel::kT || l == TLabel::kPT; }

// ---------------------------------------------------------------------------

Outcome check_sublattice_delta(Workspace& ws) {
  Outcome o;
  const auto& lat = ws.lattice();
  for (const auto& d : builtin_deltas()) {
    const auto members = lattice_members(ws, d);
    const auto res = is_closed_sublattice(lat, members, SublatticeMode::kBoth);
    o.exercised = true;
    o.notes.push_back(to_string(d) + " " + std::to_string(members.size()) + "/" +
                      std::to_string(lat.size()));
    if (!res.closed) {
      const auto [a, b] = *res.witness;
      o.fail(to_string(d) + ": meet or join of " + describe(lat[a]) + " and " + describe(lat[b]) +
             " leaves the set");
    }
  }
  return o;
}

Outcome check_sublattice_class(Workspace& ws, bool fitting) {
  Outcome o;
  const auto& lat = ws.lattice();
  for (GroupClass c : kAllClasses) {
    const auto f = flags(c);
    const bool applies = fitting ? (f.formation && f.fitting) : (f.formation && f.normally_hereditary);
    if (!applies) continue;
    const auto members = lattice_members(ws, c);
    const auto mode = fitting ? SublatticeMode::kBoth : SublatticeMode::kMeet;
    const auto res = is_closed_sublattice(lat, members, mode);
    o.exercised = true;
    o.notes.push_back(std::string(to_string(c)) + " " + std::to_string(members.size()) + "/" +
                      std::to_string(lat.size()));
    if (!res.closed) {
      const auto [a, b] = *res.witness;
      o.fail(std::string(to_string(c)) + ": " + describe(lat[a]) + " and " + describe(lat[b]));
    }
  }
  return o;
}

Outcome check_modular_pairs(Workspace& ws) {
  Outcome o;
  const auto& lat = ws.lattice();
  std::vector<std::size_t> mods;
  for (std::size_t m = 0; m < lat.size(); ++m) {
    if (ws.modular(m)) mods.push_back(m);
  }
  std::set<std::size_t> seen;
  for (std::size_t i = 0; i < mods.size(); ++i) {
    for (std::size_t j = i; j < mods.size(); ++j) {
      const std::size_t x = lat.meet(mods[i], mods[j]);
      if (!seen.insert(x).second) continue;
      for (const auto& f : ws.chief_series(ws.core_index(x), ws.closure_index(x))) {
        if (!is_prime(f.order())) {
          o.fail("A=" + describe(lat[mods[i]]) + ", B=" + describe(lat[mods[j]]) +
                 ", non-cyclic chief factor " + describe_factor(f));
        }
      }
    }
  }
  o.exercised = !mods.empty();
  o.notes.push_back(std::to_string(mods.size()) + " modular subgroups, " +
                    std::to_string(seen.size()) + " distinct intersections");
  return o;
}

std::vector<std::size_t> quasinormal_members(Workspace& ws) {
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m < ws.lattice().size(); ++m) {
    if (ws.quasinormal(m)) out.push_back(m);
  }
  return out;
}

bool closure_in_hypercenter(Workspace& ws, std::size_t m) {
  const auto& closure = ws.normals()[ws.closure_index(m)];
  return closure.is_subgroup_of(ws.hypercenter_mod(ws.core_index(m)));
}

Outcome check_quasinormal_pairs(Workspace& ws) {
  Outcome o;
  const auto& lat = ws.lattice();
  const auto qn = quasinormal_members(ws);
  std::set<std::size_t> seen;
  for (std::size_t i = 0; i < qn.size(); ++i) {
    for (std::size_t j = i; j < qn.size(); ++j) {
      const std::size_t x = lat.meet(qn[i], qn[j]);
      if (!seen.insert(x).second) continue;
      if (!closure_in_hypercenter(ws, x)) {
        o.fail("A=" + describe(lat[qn[i]]) + ", B=" + describe(lat[qn[j]]));
      }
    }
  }
  o.exercised = !qn.empty();
  o.notes.push_back(std::to_string(qn.size()) + " quasinormal subgroups, " +
                    std::to_string(seen.size()) + " distinct intersections");
  return o;
}

Outcome check_quasinormal_single(Workspace& ws) {
  Outcome o;
  const auto& lat = ws.lattice();
  const auto qn = quasinormal_members(ws);
  std::size_t non_normal = 0;
  for (std::size_t m : qn) {
    if (!is_normal(ws.group(), lat[m])) ++non_normal;
    if (!closure_in_hypercenter(ws, m)) o.fail("A=" + describe(lat[m]));
  }
  o.exercised = !qn.empty();
  o.notes.push_back(std::to_string(qn.size()) + " quasinormal subgroups, " +
                    std::to_string(non_normal) + " not normal");
  return o;
}

Outcome check_residual_structure(Workspace& ws) {
  Outcome o;
  const GroupPtr& g = ws.group();
  for (GroupClass c : kAllClasses) {
    const auto f = flags(c);
    if (!(f.formation && f.normally_hereditary && f.saturated && f.contains_nilpotent)) continue;
    const std::string cname(to_string(c));
    const Subgroup d = residual(ws, c);
    if (!is_in_class(subgroup_as_group(d).group, GroupClass::kSoluble)) {
      o.notes.push_back(cname + ": residual insoluble");
      continue;
    }
    std::string where;
    if (!lattices_equal(ws, c, DeltaSpec::f_central(c), &where)) {
      o.notes.push_back(cname + ": lattices differ at " + where);
      continue;
    }
    o.exercised = true;
    o.notes.push_back(cname + ": hypothesis holds, residual order " + std::to_string(d.order()));
    const std::string at = cname + ", D=" + describe(d) + ": ";
    if (!subgroup_as_group(d).group->is_abelian()) o.fail(at + "D not abelian");
    if (!is_hall_in(g, d)) o.fail(at + "D not a Hall subgroup");
    if (d.order() % 2 == 0) o.fail(at + "D of even order");
    if (!induces_power_automorphisms(g, d, frattini_of(ws, d))) {
      o.fail(at + "no power automorphisms on D/Phi(D)");
    }
    for (const auto& f : ws.chief_series(0, ws.normal_index(d))) {
      if (!is_prime(f.order())) o.fail(at + "non-cyclic chief factor " + describe_factor(f));
    }
  }
  return o;
}

Outcome check_nilpotent_residual_power(Workspace& ws) {
  Outcome o;
  if (!soluble(ws)) {
    o.notes.push_back("G insoluble");
    return o;
  }
  std::string where;
  if (!lattices_equal(ws, GroupClass::kNilpotent, DeltaSpec::central(), &where)) {
    o.notes.push_back("lattices differ at " + where);
    return o;
  }
  o.exercised = true;
  const Subgroup d = residual(ws, GroupClass::kNilpotent);
  o.notes.push_back("nilpotent residual order " + std::to_string(d.order()));
  if (!induces_power_automorphisms(ws.group(), d)) {
    o.fail("no power automorphisms on " + describe(d));
  }
  return o;
}

Outcome check_pst_criterion(Workspace& ws) {
  Outcome o;
  if (!soluble(ws)) {
    o.notes.push_back("G insoluble");
    return o;
  }
  o.exercised = true;
  const TLabel label = classify_t_pt_pst(ws);
  std::string where;
  const bool eq = lattices_equal(ws, GroupClass::kNilpotent, DeltaSpec::central(), &where);
  o.notes.push_back("label " + std::string(to_string(label)) + ", lattices " +
                    (eq ? "equal" : "differ at " + where));
  if (is_pst_or_better(label) != eq) {
    o.fail(eq ? "lattices equal but G not PST" : "G is PST but lattices differ at " + where);
  }
  return o;
}

Outcome check_subnormal_hypercentral(Workspace& ws) {
  Outcome o;
  if (!soluble(ws)) {
    o.notes.push_back("G insoluble");
    return o;
  }
  const auto& lat = ws.lattice();
  for (std::size_t m = 0; m < lat.size(); ++m) {
    if (!is_subnormal(ws.group(), lat[m])) continue;
    if (!lat[m].is_subgroup_of(ws.hypercenter_mod(ws.core_index(m)))) {
      o.notes.push_back("hypothesis fails at " + describe(lat[m]));
      return o;
    }
  }
  o.exercised = true;
  const TLabel label = classify_t_pt_pst(ws);
  o.notes.push_back("hypothesis holds, label " + std::string(to_string(label)));
  if (!is_pst_or_better(label)) o.fail("G not PST");
  return o;
}

Outcome check_pt_structure(Workspace& ws) {
  Outcome o;
  if (!soluble(ws)) {
    o.notes.push_back("G insoluble");
    return o;
  }
  const TLabel label = classify_t_pt_pst(ws);
  if (!is_pt_or_better(label)) {
    o.notes.push_back("G not PT");
    return o;
  }
  o.exercised = true;
  const GroupPtr& g = ws.group();
  const auto& ns = ws.normals();
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const Subgroup& d = ns[i];
    if (d.order() % 2 == 0 || !is_hall_in(g, d)) continue;
    if (!subgroup_as_group(d).group->is_abelian()) continue;
    if (!ws.section_in_class(i, top_normal(ws), GroupClass::kNilpotent)) continue;
    if (!induces_power_automorphisms(g, d)) continue;
    o.notes.push_back("D=" + describe(d));
    return o;
  }
  o.fail("no normal subgroup D with the required properties");
  return o;
}

Outcome check_pt_criterion(Workspace& ws) {
  Outcome o;
  if (!soluble(ws)) {
    o.notes.push_back("G insoluble");
    return o;
  }
  o.exercised = true;
  const bool pt = is_pt_or_better(classify_t_pt_pst(ws));
  const bool eq = lattices_equal(ws, GroupClass::kNilpotent, DeltaSpec::central(), nullptr);
  const bool iwasawa = iwasawa_sylow_condition(ws);
  o.notes.push_back(std::string(pt ? "PT" : "not PT") + ", Iwasawa condition " +
                    (iwasawa ? "true" : "false") + ", lattice equality " +
                    (eq ? "holds" : "fails"));
  if (pt != (eq && iwasawa)) {
    o.fail(pt ? "G is PT but the criterion fails" : "criterion holds but G is not PT");
  }
  return o;
}

Outcome check_factor_semidirects(Workspace& ws) {
  Outcome o;
  const GroupPtr& g = ws.group();
  const Limits& limits = ws.limits();
  const auto& ns = ws.normals();
  const auto pairs = chief_pairs(ws);
  o.exercised = !pairs.empty();

  std::vector<ChiefFactor> factors;
  std::vector<std::optional<GroupPtr>> semis;
  for (auto [lo, hi] : pairs) {
    factors.push_back(make_chief_factor(g, ns[lo], ns[hi]));
    const auto& f = factors.back();
    const std::size_t size = f.order() * (g->order() / f.centralizer.order());
    if (size > limits.isomorphism_cap) {
      semis.emplace_back();
      o.skip("semidirect product of order " + std::to_string(size) + " for " +
             describe_factor(f) + " is above the isomorphism cap");
    } else {
      semis.emplace_back(factor_semidirect(g, f, limits));
    }
  }

  std::map<std::size_t, Quotient> quotients;
  std::size_t quotient_cases = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!semis[i]) continue;
    const auto [lo, hi] = pairs[i];
    for (std::size_t n = 0; n <= lo; ++n) {
      if (!ns[n].is_subgroup_of(ns[lo])) continue;
      auto it = quotients.find(n);
      if (it == quotients.end()) it = quotients.emplace(n, quotient(g, ns[n])).first;
      const Quotient& q = it->second;
      Mask k(q.group->order()), h(q.group->order());
      for (Elem x : ns[lo].elements()) k.set(q.projection(x));
      for (Elem x : ns[hi].elements()) h.set(q.projection(x));
      const ChiefFactor fq =
          make_chief_factor(q.group, Subgroup(q.group, std::move(k)), Subgroup(q.group, std::move(h)));
      const GroupPtr s2 = factor_semidirect(q.group, fq, limits);
      ++quotient_cases;
      if (!is_isomorphic(**semis[i], *s2, limits)) {
        o.fail("(1) " + describe_factor(factors[i]) + " modulo " + describe(ns[n]));
      }
    }
  }

  std::size_t g_iso_pairs = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      if (factors[i].order() != factors[j].order()) continue;
      bool giso = false;
      try {
        giso = g_isomorphic(g, factors[i], factors[j], limits);
      } catch (const Error& e) {
        if (!e.is_cap()) throw;
        o.skip(e.what());
        continue;
      }
      if (!giso) continue;
      ++g_iso_pairs;
      const std::string at = describe_factor(factors[i]) + " and " + describe_factor(factors[j]);
      if (factors[i].centralizer != factors[j].centralizer) o.fail("(2) centralizers differ for " + at);
      if (!semis[i] || !semis[j]) {
        o.skip("(2) semidirect products above the isomorphism cap for " + at);
      } else if (!is_isomorphic(**semis[i], **semis[j], limits)) {
        o.fail("(2) semidirect products differ for " + at);
      }
    }
  }
  o.notes.push_back(std::to_string(pairs.size()) + " chief factors, " +
                    std::to_string(quotient_cases) + " quotient cases, " +
                    std::to_string(g_iso_pairs) + " G-isomorphic pairs");
  return o;
}

Outcome check_z_delta_rules(Workspace& ws) {
  Outcome o;
  const auto& ns = ws.normals();
  const std::size_t n = ns.size();
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
  std::vector<std::vector<std::size_t>> meet(n, std::vector<std::size_t>(n));
  std::vector<std::vector<std::size_t>> prod(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      le[i][j] = ns[i].is_subgroup_of(ns[j]);
      if (j < i) {
        meet[i][j] = meet[j][i];
        prod[i][j] = prod[j][i];
      } else {
        meet[i][j] = ws.normal_index(intersect(ns[i], ns[j]));
        prod[i][j] = ws.normal_index(join(ns[i], ns[j]));
      }
    }
  }
  std::size_t cases = 0;
  for (const auto& d : builtin_deltas()) {
    const std::string dn = to_string(d);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t h = 0; h < n; ++h) {
        if (!le[k][h] || !ws.z_delta(k, h, d)) continue;
        o.exercised = true;
        const std::string at = dn + ", H/K=" + describe_factor(ns[k], ns[h]);
        for (std::size_t m = 0; m < n; ++m) {
          if (!le[m][h]) continue;
          ++cases;
          const std::size_t kn = prod[k][m];
          const std::size_t k_cap_n = meet[k][m];
          if (ws.z_delta(k, kn, d) != ws.z_delta(k_cap_n, m, d)) {
            o.fail("(1) " + at + ", N=" + describe(ns[m]));
          }
          if (ws.z_delta(m, h, d) && !ws.z_delta(k_cap_n, h, d)) {
            o.fail("(2) " + at + ", N=" + describe(ns[m]));
          }
        }
        for (std::size_t v = 0; v < n; ++v) {
          if (!le[k][v]) continue;
          ++cases;
          if (ws.z_delta(k, v, d) && !ws.z_delta(k, prod[h][v], d)) {
            o.fail("(3) " + at + ", V=" + describe(ns[v]));
          }
        }
      }
    }
  }
  o.notes.push_back(std::to_string(n) + " normal subgroups, " + std::to_string(cases) + " cases");
  return o;
}

Outcome check_f_central_classes(Workspace& ws) {
  Outcome o;
  const GroupPtr& g = ws.group();
  const auto& ns = ws.normals();
  std::vector<ChiefFactor> factors;
  for (auto [lo, hi] : chief_pairs(ws)) factors.push_back(make_chief_factor(g, ns[lo], ns[hi]));
  for (GroupClass c : kAllClasses) {
    const auto f = flags(c);
    const std::string cname(to_string(c));
    const bool member = is_in_class(g, c);
    std::optional<std::size_t> off;
    for (std::size_t i = 0; i < factors.size() && !off; ++i) {
      if (!ws.in_delta(factors[i], DeltaSpec::f_central(c))) off = i;
    }
    if (f.formation && member) {
      o.exercised = true;
      if (off) o.fail(cname + ": G in class but " + describe_factor(factors[*off]) + " not F-central");
    }
    if (f.formation && f.saturated && !off) {
      o.exercised = true;
      if (!member) o.fail(cname + ": every chief factor F-central but G not in class");
    }
    o.notes.push_back(cname + (member ? " member" : " non-member") +
                      (off ? ", some factor not F-central" : ", all factors F-central"));
  }
  return o;
}

}  // namespace

std::string_view to_string(CheckId id) {
  for (const auto& info : kInfo) {
    if (info.id == id) return info.name;
  }
  return "?";
}

CheckId parse_check_id(std::string_view text) {
  for (const auto& info : kInfo) {
    if (info.name == text) return info.id;
  }
  throw Error(ErrorCode::kUnknownName, "unknown check '" + std::string(text) + "'");
}

std::string_view describe(CheckId id) {
  for (const auto& info : kInfo) {
    if (info.id == id) return info.statement;
  }
  return "";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "PASS";
    case Verdict::kFail: return "FAIL";
    case Verdict::kVacuous: return "VACUOUS";
    case Verdict::kUndecided: return "UNDECIDED";
  }
  return "?";
}

std::string describe(const Subgroup& s) {
  std::ostringstream out;
  out << "<";
  const auto gens = generators_of(s);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out << ",";
    out << s.parent().element(gens[i]).to_string();
  }
  out << "> order " << s.order();
  return out.str();
}

CheckResult run_check(Workspace& ws, CheckId id) {
  try {
    switch (id) {
      case CheckId::kThm11i: return finish(ws, id, check_sublattice_delta(ws));
      case CheckId::kThm11ii: return finish(ws, id, check_sublattice_class(ws, false));
      case CheckId::kThm11iii: return finish(ws, id, check_sublattice_class(ws, true));
      case CheckId::kCor12: return finish(ws, id, check_modular_pairs(ws));
      case CheckId::kCor13: return finish(ws, id, check_quasinormal_pairs(ws));
      case CheckId::kThm14i: return finish(ws, id, check_residual_structure(ws));
      case CheckId::kThm14ii: return finish(ws, id, check_nilpotent_residual_power(ws));
      case CheckId::kThm15: return finish(ws, id, check_pst_criterion(ws));
      case CheckId::kCor16: return finish(ws, id, check_subnormal_hypercentral(ws));
      case CheckId::kCor17: return finish(ws, id, check_pt_structure(ws));
      case CheckId::kCor18: return finish(ws, id, check_pt_criterion(ws));
      case CheckId::kLem21: return finish(ws, id, check_factor_semidirects(ws));
      case CheckId::kLem22: return finish(ws, id, check_z_delta_rules(ws));
      case CheckId::kRem31: return finish(ws, id, check_f_central_classes(ws));
      case CheckId::kQnHyp: return finish(ws, id, check_quasinormal_single(ws));
    }
  } catch (const Error& e) {
    if (!e.is_cap()) throw;
    return {ws.group()->name(), id, Verdict::kUndecided, std::string(e.what()), {}};
  }
  throw std::logic_error("unhandled check id");
}

Summary Report::summary() const {
  Summary s;
  for (const auto& r : results) {
    switch (r.verdict) {
      case Verdict::kPass: ++s.pass; break;
      case Verdict::kFail: ++s.fail; break;
      case Verdict::kVacuous: ++s.vacuous; break;
      case Verdict::kUndecided: ++s.undecided; break;
    }
  }
  return s;
}

Report run_suite(const std::vector<GroupPtr>& groups, const std::vector<CheckId>& checks,
                 const Limits& limits) {
  Report report;
  for (const auto& g : groups) {
    Workspace ws(g, limits);
    for (CheckId id : checks) {
      try {
        report.results.push_back(run_check(ws, id));
      } catch (const std::exception& e) {
        report.results.push_back({g->name(), id, Verdict::kUndecided, std::string(e.what()), {}});
      }
    }
  }
  return report;
}

}  // namespace sublat
