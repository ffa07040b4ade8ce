#include <benchmark/benchmark.h>

#include "tropcvx/recognizer.hpp"
#include "tropcvx/valuated.hpp"

namespace tropcvx {
namespace {

WeightedComplex bergman(const Matroid& m) {
  std::vector<ElementSet> sets;
  for (auto f : m.flats()) {
    if (!f.empty()) sets.push_back(f);
  }
  return chain_fan(ChainFamily(m.size(), std::move(sets)));
}

void BM_EnumerateMatroids(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_matroids(n));
}
BENCHMARK(BM_EnumerateMatroids)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_BalancingUniform(benchmark::State& state) {
  const WeightedComplex x = bergman(uniform_matroid(static_cast<std::size_t>(state.range(0)), 5));
  for (auto _ : state) benchmark::DoNotOptimize(is_balanced(x));
}
BENCHMARK(BM_BalancingUniform)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_RecognizeUniform(benchmark::State& state) {
  const WeightedComplex x = bergman(uniform_matroid(static_cast<std::size_t>(state.range(0)), 5));
  for (auto _ : state) benchmark::DoNotOptimize(recognize_fan(x));
}
BENCHMARK(BM_RecognizeUniform)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_RecognizeAllRankThreeOnFive(benchmark::State& state) {
  std::vector<WeightedComplex> fans;
  for (const auto& m : enumerate_matroids(5)) {
    if (m.rank() == 3) fans.push_back(bergman(m));
  }
  for (auto _ : state) {
    for (const auto& x : fans) benchmark::DoNotOptimize(recognize_fan(x));
  }
  state.counters["fans"] = static_cast<double>(fans.size());
}
BENCHMARK(BM_RecognizeAllRankThreeOnFive)->Unit(benchmark::kMillisecond);

void BM_SegmentInSupport(benchmark::State& state) {
  const WeightedComplex x = bergman(uniform_matroid(3, 5));
  const TropPoint a = TropPoint::canonicalize({0, 0, -3, -1, -1});
  const TropPoint b = TropPoint::canonicalize({0, -2, 0, 0, -5});
  for (auto _ : state) benchmark::DoNotOptimize(segment_in_support(x, a, b));
}
BENCHMARK(BM_SegmentInSupport)->Unit(benchmark::kMicrosecond);

void BM_MemberU24(benchmark::State& state) {
  Valuation w;
  const Matroid m = uniform_matroid(2, 4);
  for (auto b : m.bases()) w[b] = b == ElementSet::from_labels({1, 2}) ? Rational(-1) : Rational(0);
  const ValuatedMatroid v(m, w);
  const TropPoint p = TropPoint::canonicalize({0, 0, 3, 3});
  for (auto _ : state) benchmark::DoNotOptimize(member(v, p));
}
BENCHMARK(BM_MemberU24)->Unit(benchmark::kMicrosecond);

void BM_ConvexityProbe(benchmark::State& state) {
  const WeightedComplex x = bergman(uniform_matroid(2, 4));
  for (auto _ : state) benchmark::DoNotOptimize(convexity_probe(x, static_cast<std::size_t>(state.range(0)), 1));
}
BENCHMARK(BM_ConvexityProbe)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace tropcvx

BENCHMARK_MAIN();
