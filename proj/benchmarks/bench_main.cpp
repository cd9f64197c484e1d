#include <benchmark/benchmark.h>

#include "psiexp/bernoulli.hpp"
#include "psiexp/expansions.hpp"
#include "psiexp/identities.hpp"
#include "psiexp/numeric.hpp"

using namespace psiexp;

static void BM_GBernoulli(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(g_via_bernoulli(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_GBernoulli)->Arg(6)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_GPowerTransform(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(g_via_power_transform(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_GPowerTransform)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_GCompositions(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(g_via_compositions(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_GCompositions)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_GFixedP(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(g_via_bernoulli(static_cast<unsigned>(state.range(0)), Rational(2)));
}
BENCHMARK(BM_GFixedP)->Arg(12)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_BernoulliIdentity(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bernoulli_identity(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_BernoulliIdentity)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_PsiRef(benchmark::State& state) {
  const Precision prec = state.range(0);
  const BigFloat x(Rational(37, 4), prec);
  for (auto _ : state) benchmark::DoNotOptimize(psi_ref(x, prec));
}
BENCHMARK(BM_PsiRef)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond);

static void BM_ApproxGamma(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(approx_gamma(static_cast<unsigned long>(state.range(0)), 4));
}
BENCHMARK(BM_ApproxGamma)->Arg(32)->Arg(256)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
