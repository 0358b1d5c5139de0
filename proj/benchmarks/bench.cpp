#include <benchmark/benchmark.h>

#include "sublat/checks.hpp"
#include "sublat/corpus.hpp"

using namespace sublat;

static void BM_EnumerateSubgroups(benchmark::State& state, const char* name) {
  const auto g = builtin(name);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_subgroups(g)->size());
}
BENCHMARK_CAPTURE(BM_EnumerateSubgroups, S4, "S4");
BENCHMARK_CAPTURE(BM_EnumerateSubgroups, A5, "A5");
BENCHMARK_CAPTURE(BM_EnumerateSubgroups, D16, "D16");

static void BM_ChiefSeries(benchmark::State& state, const char* name) {
  const auto g = builtin(name);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        chief_series_between(g, Subgroup::trivial(g), Subgroup::whole(g)).size());
  }
}
BENCHMARK_CAPTURE(BM_ChiefSeries, S4, "S4");
BENCHMARK_CAPTURE(BM_ChiefSeries, S4xC2, "S4xC2");

static void BM_Check(benchmark::State& state, CheckId id) {
  const auto g = builtin("S4");
  for (auto _ : state) {
    Workspace ws(g);
    benchmark::DoNotOptimize(run_check(ws, id).verdict);
  }
}
BENCHMARK_CAPTURE(BM_Check, Thm11i, CheckId::kThm11i);
BENCHMARK_CAPTURE(BM_Check, Thm14i, CheckId::kThm14i);
BENCHMARK_CAPTURE(BM_Check, Lem21, CheckId::kLem21);

static void BM_FullSuite(benchmark::State& state) {
  const auto groups = corpus();
  const std::vector<CheckId> all(kAllChecks.begin(), kAllChecks.end());
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(groups, all).results.size());
}
BENCHMARK(BM_FullSuite)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
