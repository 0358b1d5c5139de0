#include "sublat/class_lattices.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "sublat/arith.hpp"

namespace sublat {

GroupClass parse_group_class(std::string_view name) {
  for (GroupClass c : kAllClasses) {
    if (to_string(c) == name) return c;
  }
  throw Error(ErrorCode::kUnknownClass, "unknown group class '" + std::string(name) + "'");
}

std::string to_string(const DeltaSpec& d) {
  switch (d.kind) {
    case DeltaSpec::Kind::kCentral: return "central";
    case DeltaSpec::Kind::kFCentral: return "f-central:" + std::string(to_string(d.cls));
    case DeltaSpec::Kind::kFMember: return "member:" + std::string(to_string(d.cls));
  }
  return "?";
}

DeltaSpec parse_delta(std::string_view text) {
  if (text == "central") return DeltaSpec::central();
  const auto colon = text.find(':');
  if (colon != std::string_view::npos) {
    const auto head = text.substr(0, colon);
    const auto cls = parse_group_class(text.substr(colon + 1));
    if (head == "f-central") return DeltaSpec::f_central(cls);
    if (head == "member") return DeltaSpec::member(cls);
  }
  throw Error(ErrorCode::kParseError, "bad delta '" + std::string(text) +
                                          "' (want central, f-central:<class> or member:<class>)");
}

std::vector<DeltaSpec> builtin_deltas() {
  std::vector<DeltaSpec> out{DeltaSpec::central()};
  for (GroupClass c : kAllClasses) out.push_back(DeltaSpec::f_central(c));
  return out;
}

// ---------------------------------------------------------------------------
// Workspace

Workspace::Workspace(GroupPtr g, Limits limits) : group_(std::move(g)), limits_(limits) {}

const SubgroupLattice& Workspace::lattice() {
  if (lattice_) return *lattice_;
  if (lattice_error_) throw *lattice_error_;
  try {
    lattice_ = enumerate_subgroups(group_, limits_);
  } catch (const Error& e) {
    lattice_error_ = e;
    throw;
  }
  closure_.assign(lattice_->size(), std::nullopt);
  core_.assign(lattice_->size(), std::nullopt);
  return *lattice_;
}

bool Workspace::lattice_available() {
  try {
    lattice();
    return true;
  } catch (const Error& e) {
    if (e.is_cap()) return false;
    throw;
  }
}

const std::vector<Subgroup>& Workspace::normals() {
  if (!normals_) {
    normals_ = normal_subgroups(group_);
    for (std::size_t i = 0; i < normals_->size(); ++i) normal_index_.emplace((*normals_)[i].mask(), i);
  }
  return *normals_;
}

std::size_t Workspace::normal_index(const Subgroup& n) {
  normals();
  require_member_of(group_, n);
  auto it = normal_index_.find(n.mask());
  if (it == normal_index_.end()) throw Error(ErrorCode::kNotNormal, "subgroup is not normal");
  return it->second;
}

std::size_t Workspace::closure_index(std::size_t m) {
  const auto& lat = lattice();
  if (!closure_[m]) closure_[m] = normal_index(normal_closure(group_, lat[m]));
  return *closure_[m];
}

std::size_t Workspace::core_index(std::size_t m) {
  const auto& lat = lattice();
  if (!core_[m]) core_[m] = normal_index(core(group_, lat[m]));
  return *core_[m];
}

const std::vector<ChiefFactor>& Workspace::chief_series(std::size_t lower, std::size_t upper) {
  auto key = std::make_pair(lower, upper);
  auto it = chief_.find(key);
  if (it == chief_.end()) {
    const auto& ns = normals();
    it = chief_.emplace(key, chief_series_between(group_, ns[lower], ns[upper],
                                                  TieBreak::kCanonical, &ns))
             .first;
  }
  return it->second;
}

bool Workspace::section_in_class(std::size_t lower, std::size_t upper, GroupClass c) {
  if (lower == upper) return true;
  auto key = std::make_tuple(lower, upper, c);
  auto it = section_class_.find(key);
  if (it != section_class_.end()) return it->second;
  const auto& ns = normals();
  SectionGroup sec = section_group(ns[lower], ns[upper]);
  bool result = is_in_class(sec.quotient.group, c);
  section_class_.emplace(key, result);
  return result;
}

bool Workspace::in_delta(const ChiefFactor& f, const DeltaSpec& d) {
  const std::size_t lo = normal_index(f.lower);
  const std::size_t hi = normal_index(f.upper);
  auto key = std::make_tuple(lo, hi, d);
  auto it = factor_delta_.find(key);
  if (it != factor_delta_.end()) return it->second;
  bool result = false;
  switch (d.kind) {
    case DeltaSpec::Kind::kCentral: result = is_central_factor(group_, f); break;
    case DeltaSpec::Kind::kFCentral: result = is_f_central(group_, f, d.cls, limits_); break;
    case DeltaSpec::Kind::kFMember: result = section_in_class(lo, hi, d.cls); break;
  }
  factor_delta_.emplace(key, result);
  return result;
}

bool Workspace::z_delta(std::size_t lower, std::size_t upper, const DeltaSpec& d) {
  auto key = std::make_tuple(lower, upper, d);
  auto it = z_delta_.find(key);
  if (it != z_delta_.end()) return it->second;
  bool result = true;
  for (const auto& f : chief_series(lower, upper)) {
    if (!in_delta(f, d)) {
      result = false;
      break;
    }
  }
  z_delta_.emplace(key, result);
  return result;
}

const Subgroup& Workspace::hypercenter_mod(std::size_t n) {
  auto it = hypercenter_mod_.find(n);
  if (it != hypercenter_mod_.end()) return it->second;
  Quotient q = quotient(group_, normals()[n]);
  Subgroup z = hypercenter(q.group);
  Mask pulled(group_->order());
  for (Elem x = 0; x < group_->order(); ++x) {
    if (z.contains(q.projection(x))) pulled.set(x);
  }
  return hypercenter_mod_.emplace(n, Subgroup(group_, std::move(pulled))).first->second;
}

const std::vector<Subgroup>& Workspace::sylows(std::size_t p) {
  auto it = sylows_.find(p);
  if (it != sylows_.end()) return it->second;
  std::vector<Subgroup> s = lattice_available() ? sylow_subgroups(lattice(), p)
                                                : sylow_subgroups_direct(group_, p);
  return sylows_.emplace(p, std::move(s)).first->second;
}

bool Workspace::lf_member(std::size_t m, GroupClass c) {
  auto key = std::make_pair(m, c);
  auto it = lf_.find(key);
  if (it != lf_.end()) return it->second;
  bool result = section_in_class(core_index(m), closure_index(m), c);
  lf_.emplace(key, result);
  return result;
}

bool Workspace::ldelta_member(std::size_t m, const DeltaSpec& d) {
  auto key = std::make_pair(m, d);
  auto it = ldelta_.find(key);
  if (it != ldelta_.end()) return it->second;
  bool result = z_delta(core_index(m), closure_index(m), d);
  ldelta_.emplace(key, result);
  return result;
}

bool Workspace::quasinormal(std::size_t m) {
  auto it = quasinormal_.find(m);
  if (it != quasinormal_.end()) return it->second;
  const auto& lat = lattice();
  bool result = true;
  for (std::size_t x = 0; x < lat.size() && result; ++x) {
    result = permutes(group_, lat[m], lat[x]);
  }
  quasinormal_.emplace(m, result);
  return result;
}

bool Workspace::modular(std::size_t m) {
  auto it = modular_.find(m);
  if (it != modular_.end()) return it->second;
  bool result = is_modular_subgroup(lattice(), m);
  modular_.emplace(m, result);
  return result;
}

// ---------------------------------------------------------------------------

Subgroup residual(Workspace& ws, GroupClass c) {
  const auto& ns = ws.normals();
  const std::size_t top = ns.size() - 1;
  Mask out(ws.group()->order());
  out.set();
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ws.section_in_class(i, top, c)) out &= ns[i].mask();
  }
  return Subgroup(ws.group(), std::move(out));
}

Subgroup radical(Workspace& ws, GroupClass c) {
  const auto& ns = ws.normals();
  Subgroup out = Subgroup::trivial(ws.group());
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ws.section_in_class(0, i, c)) out = join(out, ns[i]);
  }
  return out;
}

bool z_delta_contains(Workspace& ws, const NormalSection& section, const DeltaSpec& d) {
  return ws.z_delta(ws.normal_index(section.lower), ws.normal_index(section.upper), d);
}

std::vector<std::size_t> lattice_members(Workspace& ws, const LatticeSpec& spec) {
  const auto& lat = ws.lattice();
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m < lat.size(); ++m) {
    const bool in = std::visit(
        [&](const auto& s) {
          if constexpr (std::is_same_v<std::decay_t<decltype(s)>, GroupClass>) {
            return ws.lf_member(m, s);
          } else {
            return ws.ldelta_member(m, s);
          }
        },
        spec);
    if (in) out.push_back(m);
  }
  return out;
}

std::vector<std::size_t> lf_divergence(Workspace& ws, GroupClass c) {
  const auto& lat = ws.lattice();
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m < lat.size(); ++m) {
    if (ws.lf_member(m, c) != ws.ldelta_member(m, DeltaSpec::member(c))) out.push_back(m);
  }
  return out;
}

SublatticeCheck is_closed_sublattice(const SubgroupLattice& lattice,
                                     const std::vector<std::size_t>& members, SublatticeMode mode) {
  boost::dynamic_bitset<std::uint64_t> in(lattice.size());
  for (std::size_t m : members) in.set(m);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const std::size_t a = members[i];
      const std::size_t b = members[j];
      if (mode != SublatticeMode::kJoin && !in.test(lattice.meet(a, b))) return {false, {{a, b}}};
      if (mode != SublatticeMode::kMeet && !in.test(lattice.join(a, b))) return {false, {{a, b}}};
    }
  }
  return {};
}

bool is_subnormal(const GroupPtr& g, const Subgroup& a) {
  require_member_of(g, a);
  Subgroup h = Subgroup::whole(g);
  while (h != a) {
    Subgroup next = normal_closure_in(g, h, a);
    if (next == h) return false;
    h = std::move(next);
  }
  return true;
}

std::vector<Subgroup> sylow_subgroups_direct(const GroupPtr& g, std::size_t p) {
  const Group& G = *g;
  if (G.order() % p != 0) return {Subgroup::trivial(g)};
  Subgroup sylow = Subgroup::trivial(g);
  std::vector<Elem> gens;
  for (bool grew = true; grew;) {
    grew = false;
    for (Elem x = 1; x < G.order(); ++x) {
      if (sylow.contains(x) || p_part(G.element_order(x), p) != G.element_order(x)) continue;
      bool normalizes = std::all_of(gens.begin(), gens.end(),
                                    [&](Elem s) { return sylow.contains(G.conj(s, x)); });
      if (!normalizes) continue;
      gens.push_back(x);
      sylow = Subgroup(g, extend_closure(G, sylow.mask(), gens));
      grew = true;
      break;
    }
  }
  if (sylow.order() != p_part(G.order(), p)) throw std::logic_error("Sylow growth stopped early");
  std::vector<Subgroup> out;
  std::unordered_set<Mask> seen;
  for (Elem x = 0; x < G.order(); ++x) {
    Mask m = conjugate_mask(G, sylow.mask(), x);
    if (seen.insert(m).second) out.emplace_back(g, std::move(m));
  }
  std::sort(out.begin(), out.end(),
            [](const Subgroup& a, const Subgroup& b) { return canonical_less(a.mask(), b.mask()); });
  return out;
}

PermutabilityProfile permutability_profile(Workspace& ws, const Subgroup& a) {
  const GroupPtr& g = ws.group();
  require_member_of(g, a);
  PermutabilityProfile out{a, false, false, std::nullopt, std::nullopt, std::nullopt};
  out.normal = is_normal(g, a);
  out.subnormal = out.normal || is_subnormal(g, a);
  bool s_perm = true;
  for (std::size_t p : prime_divisors(g->order())) {
    for (const auto& s : ws.sylows(p)) {
      if (!permutes(g, a, s)) {
        s_perm = false;
        break;
      }
    }
    if (!s_perm) break;
  }
  out.s_permutable = s_perm;
  if (ws.lattice_available()) {
    const std::size_t m = ws.lattice().index_of(a);
    out.quasinormal = ws.quasinormal(m);
    out.modular = ws.modular(m);
    if ((out.normal && !*out.quasinormal) || (*out.quasinormal && !s_perm) ||
        (*out.quasinormal && !*out.modular)) {
      throw std::logic_error("permutability implication chain violated");
    }
  }
  return out;
}

std::string_view to_string(TLabel label) {
  switch (label) {
    case TLabel::kT: return "T";
    case TLabel::kPT: return "PT";
    case TLabel::kPST: return "PST";
    case TLabel::kNone: return "NONE";
  }
  return "?";
}

TLabel classify_t_pt_pst(Workspace& ws) {
  const auto& lat = ws.lattice();
  bool t = true;
  bool pt = true;
  bool pst = true;
  for (std::size_t m = 0; m < lat.size(); ++m) {
    if (!is_subnormal(ws.group(), lat[m])) continue;
    const auto prof = permutability_profile(ws, lat[m]);
    t = t && prof.normal;
    pt = pt && *prof.quasinormal;
    pst = pst && *prof.s_permutable;
  }
  if (t) return TLabel::kT;
  if (pt) return TLabel::kPT;
  if (pst) return TLabel::kPST;
  return TLabel::kNone;
}

bool induces_power_automorphisms(const GroupPtr& g, const Subgroup& d,
                                 const std::optional<Subgroup>& modulo) {
  require_member_of(g, d);
  if (!is_normal(g, d)) throw Error(ErrorCode::kNotNormal, "D must be normal");
  Subgroup m = modulo ? *modulo : Subgroup::trivial(g);
  require_member_of(g, m);
  if (!is_normal(g, m)) throw Error(ErrorCode::kNotNormal, "modulus must be normal");
  if (!m.is_subgroup_of(d)) throw Error(ErrorCode::kNotContained, "modulus must lie in D");

  const Group& G = *g;
  const auto m_gens = generators_of(m);
  for (Elem x : d.elements()) {
    std::vector<Elem> gens = m_gens;
    gens.push_back(x);
    const Mask cyclic_mod = closure_mask(G, gens);  // <x> M
    for (Elem s : G.generator_ids()) {
      if (!cyclic_mod.test(G.conj(x, s))) return false;
    }
  }
  return true;
}

bool is_hall_in(const GroupPtr& g, const Subgroup& d) {
  require_member_of(g, d);
  return std::gcd(d.order(), g->order() / d.order()) == 1;
}

bool iwasawa_sylow_condition(Workspace& ws) {
  const GroupPtr& g = ws.group();
  const auto& lat = ws.lattice();
  for (std::size_t p : prime_divisors(g->order())) {
    const Subgroup& sylow = ws.sylows(p).front();
    std::vector<std::size_t> inside;
    for (std::size_t m = 0; m < lat.size(); ++m) {
      if (lat[m].is_subgroup_of(sylow)) inside.push_back(m);
    }
    for (std::size_t i = 0; i < inside.size(); ++i) {
      for (std::size_t j = i + 1; j < inside.size(); ++j) {
        if (!permutes(g, lat[inside[i]], lat[inside[j]])) return false;
      }
    }
  }
  return true;
}

Subgroup frattini_of(Workspace& ws, const Subgroup& d) {
  const auto& lat = ws.lattice();
  const std::size_t top = lat.index_of(d);
  Mask out = d.mask();
  for (std::size_t m = 0; m < top; ++m) {
    if (!lat.contained(m, top)) continue;
    bool maximal = true;
    for (std::size_t k = m + 1; k < top && maximal; ++k) {
      if (lat.contained(m, k) && lat.contained(k, top)) maximal = false;
    }
    if (maximal) out &= lat[m].mask();
  }
  return Subgroup(ws.group(), std::move(out));
}

}  // namespace sublat
