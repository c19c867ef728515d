#include <benchmark/benchmark.h>

#include "sgw/exact/symmetric.hpp"
#include "sgw/localize.hpp"
#include "sgw/point_sgw.hpp"

namespace {

void BM_SgwPoint(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sgw::sgw_point(k));
}
BENCHMARK(BM_SgwPoint)->DenseRange(4, 9)->Unit(benchmark::kMillisecond);

void BM_CompleteHomogeneousSymbolic(benchmark::State& state) {
  const auto c = static_cast<unsigned>(state.range(0));
  const std::size_t nt = 4;
  std::vector<sgw::LinForm> weights;
  for (std::size_t m = 0; m < nt; ++m) {
    weights.push_back(sgw::LinForm::tau(0, sgw::Rational(-1, 2)) + sgw::LinForm::tau(1, sgw::Rational(-1, 2)) +
                      sgw::LinForm::tau(m));
  }
  weights.push_back(sgw::LinForm::lambda(sgw::Rational(-1, 2)));
  for (auto _ : state) benchmark::DoNotOptimize(sgw::complete_homogeneous(c, weights, nt));
}
BENCHMARK(BM_CompleteHomogeneousSymbolic)->DenseRange(2, 8, 2);

void BM_LocalizeEvaluate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  std::vector<int> classes(static_cast<std::size_t>(k), 1);
  const auto job = sgw::LocalizationJob::make(n, k, classes);
  for (auto _ : state) {
    sgw::Localizer loc;
    benchmark::DoNotOptimize(loc.invariant(job));
  }
}
BENCHMARK(BM_LocalizeEvaluate)->ArgsProduct({{1, 2, 3, 4, 5}, {1, 3}})->Unit(benchmark::kMillisecond);

void BM_LocalizeSymbolic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto job = sgw::LocalizationJob::make(n, 3, {1, 0, 0});
  for (auto _ : state) {
    sgw::Localizer loc;
    benchmark::DoNotOptimize(loc.invariant(job, sgw::Strategy::Symbolic));
  }
}
BENCHMARK(BM_LocalizeSymbolic)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
