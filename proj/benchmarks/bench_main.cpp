#include <benchmark/benchmark.h>

#include <cmath>

#include "tscale/grid2d.hpp"
#include "tscale/pachpatte.hpp"
#include "tscale/regressive.hpp"
#include "tscale/verify.hpp"
#include "tscale/witness.hpp"

using namespace tscale;

namespace {

TimeScale2D square(long long n) {
  const ScalePtr s = share(TimeScale::integer_segment(0, n - 1));
  return TimeScale2D(s, s);
}

GridFn2 smooth(const TimeScale2D& d, double scale) {
  return GridFn2::sample(d, [scale](double a, double b) { return scale * (1.0 + 0.5 * std::sin(a + 2.0 * b)); });
}

void BM_ExpFn(benchmark::State& state) {
  const ScalePtr s = share(TimeScale::integer_segment(0, state.range(0)));
  const auto p = GridFn1::sample(s, [](double t) { return 0.01 * (1.0 + std::cos(t)); });
  for (auto _ : state) benchmark::DoNotOptimize(exp_fn_scaled(p, 0));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExpFn)->RangeMultiplier(8)->Range(64, 1 << 18)->Complexity(benchmark::oN);

void BM_CumulativeDoubleIntegral(benchmark::State& state) {
  const auto d = square(state.range(0));
  const auto f = smooth(d, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(cumulative_double_integral(f));
  state.SetComplexityN(state.range(0) * state.range(0));
}
BENCHMARK(BM_CumulativeDoubleIntegral)->RangeMultiplier(2)->Range(32, 1024)->Complexity(benchmark::oN);

void BM_BoundCorollary(benchmark::State& state) {
  const auto d = square(state.range(0));
  const CorollaryInputs in{smooth(d, 1.0), smooth(d, 0.01), smooth(d, 0.01), std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(bound_corollary(in));
  state.SetComplexityN(state.range(0) * state.range(0));
}
BENCHMARK(BM_BoundCorollary)->RangeMultiplier(2)->Range(16, 512)->Complexity(benchmark::oN);

void BM_BoundKernel(benchmark::State& state) {
  const auto d = square(state.range(0));
  const auto k = KernelOracle::from_values(d, [](double t1, double t2, double s1, double s2) {
    return 0.001 * (1.0 + t1 + t2) * (1.0 + 0.1 * std::cos(s1 - s2));
  });
  const KernelInputs in{smooth(d, 1.0), smooth(d, 0.01), k, std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(bound_theorem_kernel(in));
}
BENCHMARK(BM_BoundKernel)->DenseRange(8, 32, 8);

void BM_WitnessCorollary(benchmark::State& state) {
  const auto d = square(state.range(0));
  const auto p = smooth(d, 1.0), q = smooth(d, 0.01), k = smooth(d, 0.01);
  for (auto _ : state) benchmark::DoNotOptimize(witness_corollary(p, q, k));
  state.SetComplexityN(state.range(0) * state.range(0));
}
BENCHMARK(BM_WitnessCorollary)->RangeMultiplier(2)->Range(16, 512)->Complexity(benchmark::oN);

void BM_VerifyCorollary(benchmark::State& state) {
  InstanceSpec s;
  s.theorem = Theorem::Corollary;
  s.scale1 = ScaleSpec::parse("integer:0..19");
  s.scale2 = ScaleSpec::parse("q:2,9");
  s.count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_verification(s));
}
BENCHMARK(BM_VerifyCorollary)->Arg(10)->Arg(100);

}  // namespace
BENCHMARK_MAIN();
