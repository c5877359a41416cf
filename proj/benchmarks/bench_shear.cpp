#include <benchmark/benchmark.h>

#include "univalent/shear.hpp"
#include "univalent/verify.hpp"

namespace {

using namespace univalent;

void BM_ShearExact(benchmark::State& state) {
  const auto problem =
      shear_problem<Rational>(catalog(MapName::kc, Rational(1, 3)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(shear(problem));
}
BENCHMARK(BM_ShearExact)->Arg(16)->Arg(64);

void BM_ShearFloating(benchmark::State& state) {
  const auto problem =
      shear_problem<Complex>(catalog(MapName::kc, Rational(1, 3)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(shear(problem));
}
BENCHMARK(BM_ShearFloating)->Arg(64)->Arg(512);

void BM_CheckBounds(benchmark::State& state) {
  const auto spec = catalog(MapName::ka, Rational(1, 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_bounds(spec, Conjecture::sh_strict, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_CheckBounds)->Arg(50)->Arg(200);

void BM_JacobianScan(benchmark::State& state) {
  const auto spec = catalog(MapName::sc, Rational(3));
  const auto radii = default_scan_radii();
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(jacobian_scan(spec, radii, kDefaultScanAngles, threads));
}
BENCHMARK(BM_JacobianScan)->Arg(1)->Arg(4)->UseRealTime();

}  // namespace
