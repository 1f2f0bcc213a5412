#include <benchmark/benchmark.h>

#include <string>

#include "singraph/classify.hpp"
#include "singraph/cycle_algebra.hpp"
#include "singraph/deform.hpp"
#include "singraph/delta_const.hpp"
#include "singraph/graph_io.hpp"
#include "singraph/sandwich.hpp"
#include "singraph/universe.hpp"

using namespace singraph;

namespace {

WeightedDualGraph corpus(const char* name) {
  return read_graph_file(std::string(SINGRAPH_CORPUS_DIR) + "/graphs/" + name + ".json");
}

void BM_FundamentalCycle(benchmark::State& state) {
  const auto g = corpus("e8");
  for (auto _ : state) benchmark::DoNotOptimize(fundamental_cycle(g));
}
BENCHMARK(BM_FundamentalCycle);

void BM_PositiveRootsE8(benchmark::State& state) {
  const auto g = corpus("e8");
  for (auto _ : state) benchmark::DoNotOptimize(positive_roots(g));
}
BENCHMARK(BM_PositiveRootsE8)->Unit(benchmark::kMillisecond);

void BM_LauferType(benchmark::State& state) {
  const auto g = corpus("iii4_b");
  for (auto _ : state) benchmark::DoNotOptimize(laufer_type(g));
}
BENCHMARK(BM_LauferType);

void BM_ObtainableFromBase(benchmark::State& state) {
  const auto g = corpus("te8");
  for (auto _ : state) benchmark::DoNotOptimize(obtainable_from_base(g));
}
BENCHMARK(BM_ObtainableFromBase);

void BM_Adjacencies(benchmark::State& state) {
  const auto g = corpus(state.range(0) == 0 ? "d5" : "e6");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_adjacencies(g));
}
BENCHMARK(BM_Adjacencies)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_RationalUniverse(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rational_tree_universe(static_cast<std::size_t>(state.range(0)), -4));
}
BENCHMARK(BM_RationalUniverse)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_SandwichRoundTrip(benchmark::State& state) {
  const auto g = corpus("x37_11");
  for (auto _ : state) {
    const auto a = attach_arrows(g, 0);
    benchmark::DoNotOptimize(graph_of(decorated_curve_of(a, proximity_factorize(a))));
  }
}
BENCHMARK(BM_SandwichRoundTrip);

void BM_DeltaConstSmooth(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::vector<Int>> contact(n, std::vector<Int>(n, 2));
  const auto c = smooth_branch_germ(contact, std::vector<Int>(n, 3));
  for (auto _ : state) benchmark::DoNotOptimize(delta_const_candidates(c));
}
BENCHMARK(BM_DeltaConstSmooth)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_DeltaConstCusp(benchmark::State& state) {
  const auto c = cusp_germ(static_cast<int>(state.range(0)), 2 * state.range(0) + 3);
  for (auto _ : state) benchmark::DoNotOptimize(delta_const_candidates(c));
}
BENCHMARK(BM_DeltaConstCusp)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
