#include <benchmark/benchmark.h>

#include <numeric>

#include "latticekit/cbc.hpp"
#include "latticekit/errors.hpp"

using namespace latticekit;

namespace {

SpaceParams family(WeightFamily f, std::size_t d, double alpha) {
  return SpaceParams(d, alpha, named_weight_family(f, d, alpha));
}

void BM_CbcProduct(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const CriterionContext ctx(n, family(WeightFamily::Product, 10, 2.0));
  for (auto _ : state) benchmark::DoNotOptimize(cbc_construct(ctx, 10, 1));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CbcProduct)->RangeMultiplier(4)->Range(256, 1 << 12)->Unit(benchmark::kMillisecond);

void BM_CbcPod(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const CriterionContext ctx(n, family(WeightFamily::Pod, 10, 2.0));
  for (auto _ : state) benchmark::DoNotOptimize(cbc_construct(ctx, 10, 1));
}
BENCHMARK(BM_CbcPod)->RangeMultiplier(4)->Range(256, 1 << 12)->Unit(benchmark::kMillisecond);

void BM_EngineEvaluateAll(benchmark::State& state) {
  const std::uint64_t n = 1 << 12;
  const CriterionContext ctx(n, family(WeightFamily::Product, 4, 2.0));
  CbcEngine engine(ctx, 4, 1);
  engine.accept(1);
  const auto cands = units(n);
  std::vector<long double> values(cands.size());
  for (auto _ : state) {
    engine.evaluate_all(cands, values);
    benchmark::DoNotOptimize(values.data());
  }
}
BENCHMARK(BM_EngineEvaluateAll)->Unit(benchmark::kMillisecond);

void BM_CriterionTable(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const SpaceParams params = family(WeightFamily::Product, 1, 3.0);
  for (auto _ : state) benchmark::DoNotOptimize(CriterionContext(n, params));
}
BENCHMARK(BM_CriterionTable)->Arg(1 << 10)->Arg(1 << 14)->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv) {
  set_warnings_enabled(false);
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
