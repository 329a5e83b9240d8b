#include <benchmark/benchmark.h>

#include "permsolv/atlas.hpp"
#include "permsolv/criteria.hpp"
#include "permsolv/witness.hpp"

using namespace permsolv;

namespace {

Exec policy(const benchmark::State &state) {
  return state.range(0) == 0 ? Exec::serial : Exec::parallel;
}

void BM_VerifyPairM11(benchmark::State &state) {
  const auto g = catalog_lookup("M11");
  g.elements();
  WitnessOptions options;
  options.exec = policy(state);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_prime_pair(g, 3, 11, options));
}

void BM_VerifyAlternating7(benchmark::State &state) {
  WitnessOptions options;
  options.exec = policy(state);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_alternating(7, options));
}

void BM_ProportionA5(benchmark::State &state) {
  const auto g = catalog_lookup("A5");
  CheckOptions options;
  options.exec = policy(state);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        proportion_solvable_pairs(g, ProportionMode::exhaustive(), options));
}

void BM_ThmA2PSL27(benchmark::State &state) {
  const auto g = catalog_lookup("PSL(2,7)");
  CheckOptions options;
  options.exec = policy(state);
  for (auto _ : state)
    benchmark::DoNotOptimize(thmA_condition2(g, options));
}

} // namespace

// Argument 0 is the serial reference, 1 the OpenMP kernel.
BENCHMARK(BM_VerifyPairM11)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyAlternating7)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProportionA5)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ThmA2PSL27)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
