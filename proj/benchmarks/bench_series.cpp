#include <benchmark/benchmark.h>

#include "univalent/series.hpp"

namespace {

using namespace univalent;

template <Scalar T>
TruncatedSeries<T> dense(int order) {
  std::vector<T> c(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) c[k] = from_rational<T>(Rational(k % 7 - 3 + (k == 0 ? 5 : 0), k % 5 + 1));
  return TruncatedSeries<T>(std::move(c));
}

template <Scalar T>
void BM_Multiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = dense<T>(n);
  const auto b = dense<T>(n);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.SetComplexityN(n);
}

template <Scalar T>
void BM_Reciprocal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = dense<T>(n);
  for (auto _ : state) benchmark::DoNotOptimize(reciprocal(a));
  state.SetComplexityN(n);
}

BENCHMARK_TEMPLATE(BM_Multiply, Rational)->RangeMultiplier(2)->Range(16, 128)->Complexity();
BENCHMARK_TEMPLATE(BM_Multiply, Complex)->RangeMultiplier(2)->Range(16, 1024)->Complexity();
BENCHMARK_TEMPLATE(BM_Reciprocal, Rational)->RangeMultiplier(2)->Range(16, 64)->Complexity();
BENCHMARK_TEMPLATE(BM_Reciprocal, Complex)->RangeMultiplier(2)->Range(16, 1024)->Complexity();

}  // namespace
