#include <benchmark/benchmark.h>

#include <complex>
#include <random>
#include <vector>

#include "polybound/binomial_kernel.hpp"
#include "polybound/blaschke.hpp"
#include "polybound/bounds.hpp"
#include "polybound/circle_norms.hpp"
#include "polybound/polynomial.hpp"

namespace pb = polybound;

namespace {

pb::Polynomial random_poly(int degree, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<pb::Complex> a(degree + 1);
  for (auto& c : a) c = {g(rng), g(rng)};
  return pb::Polynomial::normalize(a);
}

void BM_FindRoots(benchmark::State& state) {
  const auto f = random_poly(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(pb::find_roots(f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FindRoots)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_LpNorm(benchmark::State& state) {
  const auto f = random_poly(static_cast<int>(state.range(0)), 2);
  const double p = static_cast<double>(state.range(1)) / 4.0;
  for (auto _ : state) benchmark::DoNotOptimize(pb::lp_norm(f, p));
}
BENCHMARK(BM_LpNorm)->ArgsProduct({{4, 16, 64}, {4, 5, 6, 8, 12}});

void BM_SupNorm(benchmark::State& state) {
  const auto f = random_poly(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(pb::sup_norm(f));
}
BENCHMARK(BM_SupNorm)->Arg(4)->Arg(16)->Arg(64);

void BM_KernelValue(benchmark::State& state) {
  const double r = static_cast<double>(state.range(0)) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(pb::ip_value(1.5, r));
}
BENCHMARK(BM_KernelValue)->Arg(20)->Arg(90)->Arg(99)->Arg(101)->Arg(300);

void BM_KernelDerivativeAtOne(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pb::ip_derivative(1.5, 1.0, pb::Side::left));
}
BENCHMARK(BM_KernelDerivativeAtOne);

void BM_SubsetScan(benchmark::State& state) {
  const auto d = pb::find_roots(random_poly(static_cast<int>(state.range(0)), 4));
  for (auto _ : state) benchmark::DoNotOptimize(pb::scan_subsets(d, 1.5, false));
  state.SetComplexityN(1L << state.range(0));
}
BENCHMARK(BM_SubsetScan)->DenseRange(4, 16, 4)->Complexity(benchmark::oN);

void BM_BoundReport(benchmark::State& state) {
  const auto f = random_poly(static_cast<int>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(pb::bound_report(f, 1.25));
}
BENCHMARK(BM_BoundReport)->Arg(3)->Arg(8)->Arg(16);

}  // namespace
BENCHMARK_MAIN();
