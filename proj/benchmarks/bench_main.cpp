#include <benchmark/benchmark.h>

#include <random>

#include "tamed/catalog.hpp"

using namespace tamed;

namespace {

void BM_ClosedTwoForms(benchmark::State& state, const char* id) {
  CatalogEntry e = build_entry(id);
  for (auto _ : state) benchmark::DoNotOptimize(closed_two_forms(e.algebra).dimension);
}

void BM_DecideTaming(benchmark::State& state, const char* id) {
  CatalogEntry e = build_entry(id);
  ComplexStructure j(e.algebra, *e.j);
  for (auto _ : state) benchmark::DoNotOptimize(decide_taming(e.algebra, j).kind);
}

void BM_DecideSkt(benchmark::State& state, const char* id) {
  CatalogEntry e = build_entry(id);
  ComplexStructure j(e.algebra, *e.j);
  for (auto _ : state) benchmark::DoNotOptimize(decide_skt(e.algebra, j).kind);
}

void BM_CeDifferential(benchmark::State& state) {
  CatalogEntry e = build_yamada();
  const int n = e.algebra.dimension();
  auto forms = form_basis(n, 2);
  for (auto _ : state)
    for (const auto& f : forms) benchmark::DoNotOptimize(ce_d(e.algebra, f).size());
  state.SetItemsProcessed(state.iterations() * static_cast<long>(forms.size()));
}

void BM_JordanChevalley(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> v(-3, 3);
  RMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = v(rng);
  for (auto _ : state) benchmark::DoNotOptimize(jordan_chevalley(m).n.rows());
}

}  // namespace

BENCHMARK_CAPTURE(BM_ClosedTwoForms, ot, "ot");
BENCHMARK_CAPTURE(BM_ClosedTwoForms, yamada, "yamada");
BENCHMARK_CAPTURE(BM_DecideTaming, ot, "ot");
BENCHMARK_CAPTURE(BM_DecideTaming, s_minus1_0, "s-1-0");
BENCHMARK_CAPTURE(BM_DecideTaming, tt30_r, "tt30-r");
BENCHMARK_CAPTURE(BM_DecideSkt, ot, "ot");
BENCHMARK_CAPTURE(BM_DecideSkt, yamada, "yamada");
BENCHMARK(BM_CeDifferential);
BENCHMARK(BM_JordanChevalley)->Arg(4)->Arg(8)->Arg(12);
BENCHMARK_MAIN();
