#include <benchmark/benchmark.h>

#include "semiheap/corpus.hpp"
#include "semiheap/enumeration.hpp"
#include "semiheap/functors.hpp"
#include "semiheap/heap_chart.hpp"
#include "semiheap/semiheap.hpp"
#include "semiheap/smooth_checks.hpp"

namespace {

using namespace semiheap;

void BM_VerifyParaAssociative(benchmark::State& state) {
  const auto names = bundled_groups();
  const auto& g = names[static_cast<std::size_t>(state.range(0))].group;
  const auto t = heapify(g).semiheap().table();
  for (auto _ : state) benchmark::DoNotOptimize(verify_para_associative(t).passed());
  state.SetLabel(std::string(names[static_cast<std::size_t>(state.range(0))].name));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(t.size() * t.size() * t.size() *
                                                                         t.size() * t.size()));
}
BENCHMARK(BM_VerifyParaAssociative)->Arg(1)->Arg(5)->Arg(9)->Arg(11);

void BM_EnumerateSemiheaps(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_semiheaps(n).count);
}
BENCHMARK(BM_EnumerateSemiheaps)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_EnumerateHeaps(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_heaps(n).count);
}
BENCHMARK(BM_EnumerateHeaps)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  const auto t = heapify(bundled_groups()[static_cast<std::size_t>(state.range(0))].group).semiheap().table();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(t));
}
BENCHMARK(BM_CanonicalForm)->Arg(3)->Arg(5)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_SO3Mu(benchmark::State& state) {
  const auto chart = MatrixHeapChart::by_name("SO3");
  Rng rng(42);
  const Matrix a = chart.sample(rng), b = chart.sample(rng), c = chart.sample(rng);
  for (auto _ : state) benchmark::DoNotOptimize(chart.mu(a, b, c));
}
BENCHMARK(BM_SO3Mu);

void BM_SO3ParaAssociativeCheck(benchmark::State& state) {
  const auto chart = MatrixHeapChart::by_name("SO3");
  for (auto _ : state) benchmark::DoNotOptimize(check_para_associative_numeric(chart, 200, 42).max_residual);
}
BENCHMARK(BM_SO3ParaAssociativeCheck)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
