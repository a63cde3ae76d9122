#include <benchmark/benchmark.h>

#include <random>

#include "wcn/arrangement.hpp"
#include "wcn/construction.hpp"
#include "wcn/distance.hpp"
#include "wcn/norm.hpp"

namespace {

wcn::Word random_word(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> code(0, 5);
  wcn::Word w;
  for (std::size_t i = 0; i < n; ++i) w.push_back(wcn::Letter::from_code(code(rng)));
  return w;
}

void BM_Norm(benchmark::State& state) {
  const auto w = random_word(static_cast<std::size_t>(state.range(0)), 1);
  const auto unit = wcn::WeightTable::unit();
  for (auto _ : state) benchmark::DoNotOptimize(wcn::norm(w, unit));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Norm)->RangeMultiplier(2)->Range(64, 1024)->Complexity(benchmark::oNCubed)
    ->Unit(benchmark::kMillisecond);

void BM_Distance(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_word(n, 2);
  const auto b = random_word(n, 3);
  const auto unit = wcn::WeightTable::unit();
  for (auto _ : state) benchmark::DoNotOptimize(wcn::distance(a, b, unit));
}
BENCHMARK(BM_Distance)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_GridCurveArrangement(benchmark::State& state) {
  const auto curve = wcn::emit_grid_curve(2, 1e-3);
  for (auto _ : state) benchmark::DoNotOptimize(wcn::build_arrangement({curve}, 1e-5));
}
BENCHMARK(BM_GridCurveArrangement)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
