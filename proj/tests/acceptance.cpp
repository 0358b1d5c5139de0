#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sublat/report.hpp"
#include "support.hpp"

using namespace sublat;
using namespace sublat::testing;

namespace {

constexpr double kThm11iSeconds = 60.0;
constexpr double kSuiteSeconds = 600.0;
constexpr double kUndecidedFraction = 0.05;
constexpr std::size_t kMinExercised = 5;
constexpr std::size_t kOracleOrder = 24;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Tally {
  std::size_t cells = 0, pass = 0, fail = 0, vacuous = 0, undecided = 0;
  std::string first_fail;
};

std::map<CheckId, Tally> tally(const Report& r) {
  std::map<CheckId, Tally> out;
  for (const auto& c : r.results) {
    auto& t = out[c.check];
    ++t.cells;
    switch (c.verdict) {
      case Verdict::kPass: ++t.pass; break;
      case Verdict::kVacuous: ++t.vacuous; break;
      case Verdict::kUndecided: ++t.undecided; break;
      case Verdict::kFail:
        if (!t.fail++) t.first_fail = c.group + ": " + c.witness.value_or("");
        break;
    }
  }
  return out;
}

int failures = 0;

void line(int n, bool ok, const std::string& what, const std::string& detail) {
  if (!ok) ++failures;
  std::printf("%s AC-%d %s (%s)\n", ok ? "PASS" : "FAIL", n, what.c_str(), detail.c_str());
}

std::string no_fail(std::map<CheckId, Tally>& t, std::initializer_list<CheckId> ids, bool& ok) {
  std::string d;
  for (auto id : ids) {
    const auto& x = t[id];
    if (x.fail) ok = false;
    if (!d.empty()) d += "; ";
    d += std::string(to_string(id)) + " " + std::to_string(x.pass) + "/" + std::to_string(x.fail) +
         "/" + std::to_string(x.vacuous) + "/" + std::to_string(x.undecided);
    if (x.fail) d += " first fail " + x.first_fail;
  }
  return d + " [pass/fail/vacuous/undecided]";
}

}  // namespace

int main() {
  const auto groups = corpus();
  const std::vector<CheckId> all(kAllChecks.begin(), kAllChecks.end());

  auto t0 = Clock::now();
  const auto r11 = run_suite(groups, {CheckId::kThm11i});
  const double s11 = seconds_since(t0);

  t0 = Clock::now();
  const auto full = run_suite(groups, all);
  const double s_full = seconds_since(t0);
  const auto again = run_suite(corpus(), all);
  auto t = tally(full);

  {
    auto t11 = tally(r11);
    bool ok = s11 < kThm11iSeconds;
    auto d = no_fail(t11, {CheckId::kThm11i}, ok);
    line(1, ok, "THM-1.1i holds on the corpus within 60 s", d + ", " + std::to_string(s11) + " s");
  }
  {
    bool ok = true;
    auto d = no_fail(t, {CheckId::kThm11ii, CheckId::kThm11iii}, ok);
    line(2, ok, "THM-1.1ii and THM-1.1iii hold on the corpus", d);
  }
  {
    bool ok = true;
    auto d = no_fail(t, {CheckId::kThm15}, ok);
    const std::vector<std::pair<std::string, TLabel>> spots = {
        {"S3", TLabel::kT}, {"Q8", TLabel::kT}, {"D8", TLabel::kPST},
        {"S4", TLabel::kNone}, {"A4", TLabel::kNone},
    };
    for (const auto& [name, want] : spots) {
      Workspace ws(builtin(name));
      const auto got = classify_t_pt_pst(ws);
      if (got != want) ok = false;
      d += ", " + name + "=" + std::string(to_string(got));
    }
    std::size_t agree = 0, soluble = 0;
    for (const auto& g : groups) {
      if (!is_in_class(g, GroupClass::kSoluble)) continue;
      ++soluble;
      Workspace ws(g);
      const bool pst = classify_t_pt_pst(ws) != TLabel::kNone;
      const bool eq = lattice_members(ws, GroupClass::kNilpotent) ==
                      lattice_members(ws, DeltaSpec::central());
      agree += pst == eq;
    }
    if (agree != soluble) ok = false;
    d += ", PST iff equal lattices on " + std::to_string(agree) + "/" + std::to_string(soluble) +
         " soluble groups";
    line(3, ok, "THM-1.5 and the T/PT/PST labels", d);
  }
  {
    bool ok = true;
    auto d = no_fail(t, {CheckId::kCor12, CheckId::kCor13, CheckId::kQnHyp}, ok);
    Workspace ws(builtin("M16"));
    std::size_t qn = 0;
    const auto& lat = ws.lattice();
    for (std::size_t m = 0; m < lat.size(); ++m) {
      if (ws.quasinormal(m) && !is_normal(ws.group(), lat[m])) ++qn;
    }
    if (qn == 0) ok = false;
    d += ", M16 quasinormal non-normal " + std::to_string(qn);
    line(4, ok, "modular and quasinormal claims, M16 exercises the hypothesis", d);
  }
  {
    bool ok = true;
    auto d = no_fail(t,
                     {CheckId::kThm14i, CheckId::kThm14ii, CheckId::kCor16, CheckId::kCor17,
                      CheckId::kCor18},
                     ok);
    for (auto id : {CheckId::kThm14i, CheckId::kThm15, CheckId::kCor18}) {
      const auto& x = t[id];
      const auto exercised = x.cells - x.vacuous - x.undecided;
      if (exercised < kMinExercised) ok = false;
      d += ", " + std::string(to_string(id)) + " non-vacuous " + std::to_string(exercised);
    }
    line(5, ok, "structure claims hold and are exercised on at least 5 groups", d);
  }
  {
    bool ok = true;
    auto d = no_fail(t, {CheckId::kLem21, CheckId::kLem22, CheckId::kRem31}, ok);
    const auto s = full.summary();
    const auto cells = full.results.size();
    const double frac = cells ? double(s.undecided) / double(cells) : 0.0;
    if (frac > kUndecidedFraction) ok = false;
    d += ", undecided " + std::to_string(s.undecided) + "/" + std::to_string(cells);
    line(6, ok, "lemmas hold and at most 5% of cells are undecided", d);
  }
  {
    bool ok = true;
    std::size_t hyper = 0, counts = 0, ties = 0;
    for (const auto& g : groups) {
      if (hypercenter(g) != hypercenter_from_chief_factors(g)) ok = false;
      ++hyper;
      if (g->order() <= kOracleOrder) {
        if (enumerate_subgroups(g)->size() != brute_subgroups(*g).size()) ok = false;
        ++counts;
      }
      const auto ns = normal_subgroups(g);
      for (const auto& lo : ns) {
        for (const auto& hi : ns) {
          if (!lo.is_subgroup_of(hi)) continue;
          auto a = chief_series_between(g, lo, hi, TieBreak::kCanonical);
          auto b = chief_series_between(g, lo, hi, TieBreak::kReversed);
          std::multiset<std::size_t> oa, ob;
          for (const auto& f : a) oa.insert(f.order());
          for (const auto& f : b) ob.insert(f.order());
          if (oa != ob) ok = false;
          ++ties;
        }
      }
    }
    line(7, ok, "library results agree with independent oracles",
         "hypercenter " + std::to_string(hyper) + " groups, subgroup counts " +
             std::to_string(counts) + " groups, tie-break " + std::to_string(ties) + " sections");
  }
  {
    const auto a = export_report(full, Format::kJson);
    const auto b = export_report(again, Format::kJson);
    const bool ok = s_full < kSuiteSeconds && a == b;
    line(8, ok, "full suite within 10 min and byte-deterministic",
         std::to_string(s_full) + " s, " + std::to_string(a.size()) + " bytes, " +
             (a == b ? "identical" : "differs"));
  }
  return failures ? 1 : 0;
}
