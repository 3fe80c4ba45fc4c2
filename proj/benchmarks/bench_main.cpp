#include <benchmark/benchmark.h>

#include "cohcfg/coherent_config.hpp"
#include "cohcfg/equitable.hpp"
#include "cohcfg/sieve.hpp"
#include "cohcfg/tableau.hpp"
#include "support/fixtures.hpp"

namespace {

void BM_validate_pairs_circulant(benchmark::State& state) {
  const cohcfg::ColorMatrix matrix = fixtures::pairs_circulant(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cohcfg::validate_configuration(matrix));
}
BENCHMARK(BM_validate_pairs_circulant)->Arg(31)->Arg(61)->Arg(101)->Unit(benchmark::kMillisecond);

void BM_survey(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cohcfg::survey(state.range(0)));
}
BENCHMARK(BM_survey)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_tableau_largest_candidate(benchmark::State& state) {
  const cohcfg::TableauInstance instance = cohcfg::TableauInstance::create({12, 33, 44}, 44);
  for (auto _ : state) benchmark::DoNotOptimize(cohcfg::eliminate(instance));
}
BENCHMARK(BM_tableau_largest_candidate)->Unit(benchmark::kMicrosecond);

void BM_enumerate_equitable(benchmark::State& state) {
  const cohcfg::CoherentConfig cc = cohcfg::validate_configuration(
      fixtures::pairs_circulant(static_cast<int>(state.range(0))));
  for (auto _ : state)
    benchmark::DoNotOptimize(cohcfg::enumerate_equitable(cc, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_enumerate_equitable)->Arg(7)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
