#include <benchmark/benchmark.h>

#include "domset/bounds.hpp"
#include "domset/branch_bound.hpp"
#include "domset/exhaustive.hpp"
#include "domset/graph.hpp"

namespace {

void BM_GnpSample(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    auto g = domset::gnp_sample(n, 0.5, seed++);
    benchmark::DoNotOptimize(g.edge_count());
  }
}
BENCHMARK(BM_GnpSample)->Arg(100)->Arg(1000);

void BM_BranchBoundFixedP(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = domset::gnp_sample(n, 0.5, 42);
  for (auto _ : state) {
    auto report = domset::bb_solve(g);
    benchmark::DoNotOptimize(report.expansions);
  }
}
BENCHMARK(BM_BranchBoundFixedP)->Arg(20)->Arg(30);

void BM_BranchBoundSparse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = domset::gnp_sample(n, 2.0 / n, 42);
  for (auto _ : state) {
    auto report = domset::bb_solve(g);
    benchmark::DoNotOptimize(report.expansions);
  }
}
BENCHMARK(BM_BranchBoundSparse)->Arg(16)->Arg(20);

void BM_ExhaustiveSolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = domset::gnp_sample(n, 0.3, 7);
  for (auto _ : state) {
    auto report = domset::exhaustive_solve(g);
    benchmark::DoNotOptimize(report.dominating_subsets);
  }
}
BENCHMARK(BM_ExhaustiveSolve)->Arg(16)->Arg(20);

void BM_OracleGamma(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = domset::gnp_sample(n, 0.3, 7);
  for (auto _ : state) {
    auto res = domset::domination_number_oracle(g);
    benchmark::DoNotOptimize(res.size);
  }
}
BENCHMARK(BM_OracleGamma)->Arg(16)->Arg(20);

void BM_LambertW(benchmark::State& state) {
  double x = 1e-6;
  for (auto _ : state) {
    benchmark::DoNotOptimize(domset::bounds::lambert_w(x));
    x = x < 1e8 ? x * 1.7 : 1e-6;
  }
}
BENCHMARK(BM_LambertW);

void BM_ExpectedDominatingSets(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(domset::bounds::expected_dominating_sets_log(n, 0.3));
}
BENCHMARK(BM_ExpectedDominatingSets)->Arg(100)->Arg(10000);

void BM_TnpGrid(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(domset::bounds::tnp_upper_grid(1000, 2.0).base);
}
BENCHMARK(BM_TnpGrid);

}  // namespace

BENCHMARK_MAIN();
