// Serial reference versus OpenMP kernels on the same inputs.

#include <benchmark/benchmark.h>

#include "idom/validate.hpp"

using namespace idom;

namespace {

constexpr std::uint64_t kSeed = 7;

Execution exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_SolverSuite(benchmark::State& state) {
  const auto corpus = default_corpus(Suite::Solver, kSeed, 300);
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(Suite::Solver, corpus, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus.size()));
  label(state);
}
BENCHMARK(BM_SolverSuite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ConstrainedSuite(benchmark::State& state) {
  const auto corpus = default_corpus(Suite::Constrained, kSeed, 300);
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(Suite::Constrained, corpus, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus.size()));
  label(state);
}
BENCHMARK(BM_ConstrainedSuite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ReductionSuite(benchmark::State& state) {
  const auto corpus = default_corpus(Suite::Thm1, kSeed, 100);
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(Suite::Thm1, corpus, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus.size()));
  label(state);
}
BENCHMARK(BM_ReductionSuite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CorpusGeneration(benchmark::State& state) {
  // Generation is always parallel; this measures the cost the suites amortize.
  for (auto _ : state) benchmark::DoNotOptimize(random_class_corpus(kSeed, 300));
}
BENCHMARK(BM_CorpusGeneration)->Unit(benchmark::kMillisecond);

void BM_Lemma6(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(check_lemma6(n, exec_of(state)));
  label(state);
}
BENCHMARK(BM_Lemma6)->Args({0, 6})->Args({1, 6})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
