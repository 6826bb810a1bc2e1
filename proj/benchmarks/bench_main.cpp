#include <benchmark/benchmark.h>

#include "swfusion/fock.hpp"
#include "swfusion/fusion.hpp"
#include "swfusion/qseries.hpp"

using namespace swf;

namespace {

void filtration(benchmark::State& state, RankEngine engine) {
  const int N = static_cast<int>(state.range(0));
  const auto z = EvaluationParams::consecutive(N);
  FiltrationOptions opts;
  opts.engine = engine;
  for (auto _ : state) benchmark::DoNotOptimize(build_filtration(N, z, opts));
}

void BM_FiltrationRational(benchmark::State& state) { filtration(state, RankEngine::Rational); }
void BM_FiltrationModular(benchmark::State& state) { filtration(state, RankEngine::Modular); }
BENCHMARK(BM_FiltrationRational)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FiltrationModular)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_MajGf(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(maj_gf(Partition{N - N / 2, N / 2}));
}
BENCHMARK(BM_MajGf)->DenseRange(8, 16, 4);

void BM_SchurToPower(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto shapes = partitions_of(n);
  for (auto _ : state)
    for (const auto& l : shapes) benchmark::DoNotOptimize(convert(SymFunc::element(Basis::s, l), Basis::p));
}
BENCHMARK(BM_SchurToPower)->DenseRange(4, 8, 2);

void BM_EWordApply(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const EWord w(k, std::vector<int>(static_cast<std::size_t>(k), 0));
  for (auto _ : state) benchmark::DoNotOptimize(e_word_apply(w));
}
BENCHMARK(BM_EWordApply)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

void BM_VirasoroMode(benchmark::State& state) {
  const auto f = convert(SymFunc::element(Basis::s, Partition{3, 3, 2}), Basis::p);
  for (auto _ : state) benchmark::DoNotOptimize(virasoro_apply(static_cast<int>(state.range(0)), f));
}
BENCHMARK(BM_VirasoroMode)->Arg(-2)->Arg(0)->Arg(2);

}  // namespace
BENCHMARK_MAIN();
