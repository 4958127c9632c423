#include <benchmark/benchmark.h>

#include "zc1/psl2.hpp"
#include "zc1/report.hpp"

using namespace zc1;

namespace {

void BM_CyclotomicMultiply(benchmark::State& state) {
  std::int64_t n = state.range(0);
  Cyclotomic a, b;
  for (std::int64_t e = 0; e < n; e += 3)
    a = a + Cyclotomic::root_of_unity(n, e) * Rational(e + 1, 7);
  for (std::int64_t e = 1; e < n; e += 4)
    b = b + Cyclotomic::root_of_unity(n, e) * Rational(3, e + 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicMultiply)->Arg(12)->Arg(60)->Arg(97);

void BM_GaussSumSquare(benchmark::State& state) {
  std::int64_t p = state.range(0);
  for (auto _ : state) {
    Cyclotomic g = Cyclotomic::gauss_sum(p);
    benchmark::DoNotOptimize(g * g);
  }
}
BENCHMARK(BM_GaussSumSquare)->Arg(13)->Arg(41)->Arg(97);

void BM_GaloisOrbitTrace(benchmark::State& state) {
  std::int64_t p = state.range(0);
  Cyclotomic twisted = Cyclotomic::gauss_sum(p) * Cyclotomic::root_of_unity(p, -1);
  for (auto _ : state) benchmark::DoNotOptimize(twisted.trace_in(p));
}
BENCHMARK(BM_GaloisOrbitTrace)->Arg(13)->Arg(41)->Arg(97);

void BM_BuildSystemOrder6(benchmark::State& state) {
  const CharacterTable& t = builtin_table("A4xS3");
  PriorSolutions prior;
  prior.emplace(2, analyze_order(t, 2, prior));
  prior.emplace(3, analyze_order(t, 3, prior));
  auto profiles = power_profiles(t, 6, prior);
  for (auto _ : state)
    benchmark::DoNotOptimize(build_system(t, 6, profiles[0]));
}
BENCHMARK(BM_BuildSystemOrder6);

void BM_EnumerateInvolutions(benchmark::State& state) {
  const CharacterTable& t = builtin_table("S4xC2");
  PowerProfile profile;
  profile.order = 2;
  ConstraintSystem sys = build_system(t, 2, profile);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_solutions(sys));
}
BENCHMARK(BM_EnumerateInvolutions);

void BM_AnalyzeA4xS3(benchmark::State& state) {
  const CharacterTable& t = builtin_table("A4xS3");
  for (auto _ : state) benchmark::DoNotOptimize(analyze_all(t));
}
BENCHMARK(BM_AnalyzeA4xS3);

void BM_Psl2OrderP(benchmark::State& state) {
  std::int64_t p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(order_p_analysis(p));
}
BENCHMARK(BM_Psl2OrderP)->Arg(5)->Arg(13)->Arg(31);

}  // namespace

BENCHMARK_MAIN();
