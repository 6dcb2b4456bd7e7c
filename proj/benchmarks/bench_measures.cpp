#include <benchmark/benchmark.h>

#include "gme/bipartite.hpp"
#include "gme/linalg.hpp"
#include "gme/product_opt.hpp"
#include "gme/states.hpp"
#include "gme/tangle.hpp"
#include "gme/wclass.hpp"

namespace {

void BM_Svd8x8(benchmark::State& state) {
  gme::RandomSource rng(1);
  gme::Matrix m = gme::random_ginibre(8, 8, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gme::svd(m));
  }
}
BENCHMARK(BM_Svd8x8);

void BM_SchmidtThreeQubit(benchmark::State& state) {
  gme::RandomSource rng(2);
  gme::PureState s = gme::random_state({2, 2, 2}, rng);
  gme::Cut cut{{0}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(gme::schmidt(s, cut));
  }
}
BENCHMARK(BM_SchmidtThreeQubit);

void BM_NearestProduct(benchmark::State& state) {
  gme::RandomSource rng(3);
  gme::PureState s = gme::random_state({2, 2, 2}, rng);
  gme::OptConfig cfg;
  cfg.n_starts = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gme::nearest_product(s, cfg));
  }
}
BENCHMARK(BM_NearestProduct)->Arg(8)->Arg(32);

void BM_EW(benchmark::State& state) {
  gme::PureState s = gme::table1_phi();
  gme::OptConfig cfg;
  cfg.n_starts = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gme::e_w(s, cfg));
  }
}
BENCHMARK(BM_EW)->Arg(8)->Arg(32);

void BM_ThreeTangle(benchmark::State& state) {
  gme::RandomSource rng(4);
  gme::PureState s = gme::random_state({2, 2, 2}, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gme::three_tangle(s));
  }
}
BENCHMARK(BM_ThreeTangle);

}  // namespace

BENCHMARK_MAIN();
