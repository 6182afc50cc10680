#include <benchmark/benchmark.h>

#include "burnside/ctx.hpp"
#include "burnside/element.hpp"
#include "burnside/poset.hpp"
#include "burnside/series.hpp"

namespace {

using namespace burnside;

void BM_SymmetricTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Ctx ctx;  // fresh context: measures the full enumeration
    benchmark::DoNotOptimize(ctx.symmetric_table(n));
  }
}
BENCHMARK(BM_SymmetricTable)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_BasisProducts(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Ctx ctx;
    const TablePtr table = ctx.symmetric_table(n);
    BurnsideElement acc = BurnsideElement::zero(table);
    for (int r = 0; r < table->num_classes(); ++r)
      for (int c = r; c < table->num_classes(); ++c)
        acc += BurnsideElement::basis(table, r) * BurnsideElement::basis(table, c);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_BasisProducts)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_TwoLabelLefschetz(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Ctx ctx;
  for (auto _ : state) {
    const GPoset p = two_label_poset(ctx, n);
    benchmark::DoNotOptimize(lefschetz_invariant(ctx, p));
  }
}
BENCHMARK(BM_TwoLabelLefschetz)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ChainEnumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Ctx ctx;
  const GSet base = natural_gset(ctx.symmetric(n), ctx.caps());
  const GSet plus = adjoin_fixed_point(base, ctx.caps());
  const GPoset p = bounded_subset_poset(plus, n, ctx.caps());
  for (auto _ : state) {
    int64_t total = 0;
    for (int j = 0;; ++j) {
      const GSet chains = chain_tuples(p, j, ctx.caps());
      if (chains.size() == 0) break;
      total += chains.size();
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_ChainEnumeration)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_StarInverse(benchmark::State& state) {
  const int trunc = static_cast<int>(state.range(0));
  Ctx ctx;
  const Series ones = exp_monomial(ctx, 1, 0, trunc);
  for (auto _ : state) benchmark::DoNotOptimize(star_inverse(ctx, ones));
}
BENCHMARK(BM_StarInverse)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_OrbitDecompose(benchmark::State& state) {
  Ctx ctx;
  const GroupPtr g = ctx.symmetric(4);
  const GSet reg = regular_gset(g, ctx.caps());
  const GSet prod = product_gset(reg, reg, ctx.caps());
  for (auto _ : state) benchmark::DoNotOptimize(from_gset(ctx, prod));
}
BENCHMARK(BM_OrbitDecompose)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
