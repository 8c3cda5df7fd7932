#include <benchmark/benchmark.h>

#include "starlike/beta.hpp"
#include "starlike/conditions.hpp"
#include "starlike/special_functions.hpp"
#include "starlike/transform.hpp"
#include "starlike/verifier.hpp"

using namespace starlike;

namespace {

const ParameterSet kUnit = ParameterSet::make(3, 1, 1, 0);

void BM_solve_beta_bernardi(benchmark::State& state) {
  const auto p = ParameterSet::make(1, 0, 1, 0);
  const auto w = Weight::bernardi(0);
  for (auto _ : state) benchmark::DoNotOptimize(solve_beta(w, p));
}
BENCHMARK(BM_solve_beta_bernardi)->Unit(benchmark::kMillisecond);

void BM_solve_beta_komatu(benchmark::State& state) {
  const auto w = Weight::komatu(0.5, 2.5);
  for (auto _ : state) benchmark::DoNotOptimize(solve_beta(w, kUnit));
}
BENCHMARK(BM_solve_beta_komatu)->Unit(benchmark::kMillisecond);

void BM_beta_5F4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(solve_beta_5F4(1, 3, kUnit));
}
BENCHMARK(BM_beta_5F4)->Unit(benchmark::kMicrosecond);

void BM_hyp2f1(benchmark::State& state) {
  double z = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hyp2f1(0.3, 0.7, 2.2, z));
    z = z < 0.98 ? z + 0.01 : 0.0;
  }
}
BENCHMARK(BM_hyp2f1);

void BM_series_pow(benchmark::State& state) {
  std::vector<cplx> c(static_cast<std::size_t>(state.range(0)) + 1);
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = 1.0 / ((n + 1.0) * (n + 1.0));
  const PowerSeries s(std::move(c));
  for (auto _ : state) benchmark::DoNotOptimize(series_pow(s, 0.5));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_series_pow)->RangeMultiplier(4)->Range(64, 4096)->Complexity(benchmark::oNSquared);

void BM_minimize_N(benchmark::State& state) {
  const auto w = Weight::bernardi(0);
  for (auto _ : state) benchmark::DoNotOptimize(minimize_N(w, kUnit));
}
BENCHMARK(BM_minimize_N)->Unit(benchmark::kMillisecond);

void BM_starlike_margin(benchmark::State& state) {
  const auto w = Weight::uniform();
  const double beta = solve_beta(w, kUnit).beta;
  const auto G = G_series(apply_transform(make_member({1, -1, beta}, kUnit, 2488), w));
  const auto grid = default_disk_grid();
  for (auto _ : state) benchmark::DoNotOptimize(starlike_margin(G, 0.0, grid));
}
BENCHMARK(BM_starlike_margin)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
