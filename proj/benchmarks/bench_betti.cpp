#include <benchmark/benchmark.h>

#include <vector>

#include "forestbetti/forest_betti.hpp"
#include "forestbetti/random_forest.hpp"
#include "forestbetti/taylor.hpp"

namespace {

using forestbetti::SimplicialComplex;

// Forests whose facet count is close to the requested one; seeds are fixed so
// runs are comparable.
std::vector<SimplicialComplex> forests_with(std::size_t facets, std::size_t count) {
  std::vector<SimplicialComplex> out;
  for (std::uint64_t seed = 1; out.size() < count; ++seed) {
    auto g = forestbetti::random_forest(seed, {3 * facets, facets});
    if (g.num_facets() + 1 >= facets) out.push_back(std::move(g));
  }
  return out;
}

void BM_ForestRecursion(benchmark::State& state) {
  const auto forests = forests_with(static_cast<std::size_t>(state.range(0)), 16);
  for (auto _ : state) {
    for (const auto& g : forests) {
      benchmark::DoNotOptimize(forestbetti::forest_graded_betti(g));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(forests.size()));
}
BENCHMARK(BM_ForestRecursion)->DenseRange(4, 16, 4);

void BM_TaylorOracle(benchmark::State& state) {
  const auto forests = forests_with(static_cast<std::size_t>(state.range(0)), 16);
  const forestbetti::PrimeField field(2);
  forestbetti::OracleOptions options;
  options.threads = 1;
  for (auto _ : state) {
    for (const auto& g : forests) {
      benchmark::DoNotOptimize(
          forestbetti::all_multigraded_betti(forestbetti::facet_ideal(g), field, options));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(forests.size()));
}
BENCHMARK(BM_TaylorOracle)->DenseRange(4, 12, 4);

void BM_IsForest(benchmark::State& state) {
  const auto forests = forests_with(static_cast<std::size_t>(state.range(0)), 16);
  for (auto _ : state) {
    for (const auto& g : forests) benchmark::DoNotOptimize(forestbetti::is_forest(g));
  }
}
BENCHMARK(BM_IsForest)->RangeMultiplier(2)->Range(4, 64);

}  // namespace

BENCHMARK_MAIN();
