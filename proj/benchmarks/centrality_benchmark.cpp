#include <benchmark/benchmark.h>

#include <qcentrality/classical.hpp>
#include <qcentrality/generators.hpp>
#include <qcentrality/quantum_walk.hpp>
#include <qcentrality/ranking.hpp>
#include <qcentrality/spectral.hpp>

#include <random>

using namespace qcentrality;

static DirectedGraph bench_graph(std::size_t n) {
  return scale_free(n, {0.4, 0.55, 0.05, 0.2, 0.0, 42});
}

static void BM_SymEigCqa(benchmark::State& state) {
  const auto g = bench_graph(static_cast<std::size_t>(state.range(0)));
  const Hamiltonian h = build_cqa_hamiltonian(g, {});
  for (auto _ : state) benchmark::DoNotOptimize(sym_eig(h.matrix));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SymEigCqa)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oNCubed);

static void BM_Cqaw(benchmark::State& state) {
  const auto g = bench_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cqaw_scores(g));
}
BENCHMARK(BM_Cqaw)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);

static void BM_Cqg(benchmark::State& state) {
  const auto g = bench_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cqg_scores(g));
}
BENCHMARK(BM_Cqg)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_Hits(benchmark::State& state) {
  const auto g = bench_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hits_scores(g));
}
BENCHMARK(BM_Hits)->Arg(128)->Arg(1024)->Unit(benchmark::kMicrosecond);

static void BM_PageRank(benchmark::State& state) {
  const auto g = bench_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pagerank_scores(g));
}
BENCHMARK(BM_PageRank)->Arg(128)->Arg(1024)->Arg(8192)->Unit(benchmark::kMicrosecond);

static void BM_KendallTau(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> level(0, 99);
  std::vector<double> a(n), b(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = level(rng);
    b[i] = level(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(kendall_tau(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KendallTau)->RangeMultiplier(8)->Range(64, 1 << 18)->Complexity(benchmark::oNLogN);

BENCHMARK_MAIN();
