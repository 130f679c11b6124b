#include <gml/group.hpp>
#include <gml/mass.hpp>
#include <gml/qsym.hpp>
#include <gml/stringy.hpp>

#include <benchmark/benchmark.h>

#include <bit>
#include <vector>

using namespace gml;

namespace {

void BM_TameSymmetric(benchmark::State& state) {
  const TameScenario s{catalog::symmetric_permutation(static_cast<std::size_t>(state.range(0)), 2), 7};
  TameOptions options;
  options.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(tame_total_masses(s, options));
}
BENCHMARK(BM_TameSymmetric)->Args({4, 1})->Args({5, 1})->Args({5, 4})->Unit(benchmark::kMillisecond);

void BM_TameByClasses(benchmark::State& state) {
  const TameScenario s{catalog::signed_permutation(4, 2), 5};
  TameOptions options;
  options.full_enumeration_limit = 0;
  for (auto _ : state) benchmark::DoNotOptimize(tame_total_masses(s, options));
}
BENCHMARK(BM_TameByClasses)->Unit(benchmark::kMillisecond);

void BM_Bhargava(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bhargava_masses(state.range(0)));
}
BENCHMARK(BM_Bhargava)->Arg(10)->Arg(20)->Arg(40);

void BM_FromTermsAndDual(benchmark::State& state) {
  // Terms closed under b -> -b so every class is rational.
  const std::vector<ExpTerm> terms = {
      {Rational(1), 0, Rational(1)}, {Rational(2), 1, Rational(-1, 2)}, {Rational(2), 5, Rational(-1, 2)},
      {Rational(-3), 2, Rational(1, 3)}, {Rational(-3), 4, Rational(1, 3)}};
  for (auto _ : state) {
    const auto f = from_terms(6, terms, Rational(2, 3));
    benchmark::DoNotOptimize(dual(f) * f);
  }
}
BENCHMARK(BM_FromTermsAndDual);

void BM_StringyCount(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  ResolutionData d;
  d.dim = 2;
  for (std::size_t j = 0; j < n; ++j) d.horizontal.push_back(ratio(static_cast<long>(j) + 1, 3));
  for (DivisorSet s = 0; s < (DivisorSet{1} << n); ++s) {
    d.strata.emplace(s, ClassFunction::q_power(Rational(static_cast<long>(n) - std::popcount(s))));
  }
  for (auto _ : state) benchmark::DoNotOptimize(stringy_count(d));
}
BENCHMARK(BM_StringyCount)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
