#include "vilenkin/characters.hpp"
#include "vilenkin/sharpness.hpp"

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>

using namespace vilenkin;

namespace {

BasePtr walsh_base(int N) { return make_base(std::vector<int>(N, 2), N); }

CellFunction random_function(const BasePtr& base, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  CellFunction f(base);
  for (auto& v : f.values()) v = cplx{dist(rng), dist(rng)};
  return f;
}

// naive O(M_N^2) transform, for scale comparison against the axis sweep
Spectrum naive_analyze(const CellFunction& f) {
  Spectrum s(f.base());
  for (std::uint64_t n = 0; n < s.size(); ++n) {
    const auto psi = vilenkin_character(f.base(), n);
    cplx acc{};
    for (std::uint64_t x = 0; x < f.size(); ++x) acc += f[x] * std::conj(psi[x]);
    s[n] = acc / static_cast<double>(f.size());
  }
  return s;
}

void BM_analyze_fast(benchmark::State& state) {
  const auto base = walsh_base(static_cast<int>(state.range(0)));
  const auto f = random_function(base, 7);
  for (auto _ : state) benchmark::DoNotOptimize(analyze(f));
  state.SetComplexityN(static_cast<std::int64_t>(base->cell_count()));
}
BENCHMARK(BM_analyze_fast)->DenseRange(6, 12, 2)->Complexity(benchmark::oNLogN);

void BM_analyze_naive(benchmark::State& state) {
  const auto base = walsh_base(static_cast<int>(state.range(0)));
  const auto f = random_function(base, 7);
  for (auto _ : state) benchmark::DoNotOptimize(naive_analyze(f));
  state.SetComplexityN(static_cast<std::int64_t>(base->cell_count()));
}
BENCHMARK(BM_analyze_naive)->DenseRange(6, 10, 2)->Complexity(benchmark::oNSquared);

void BM_dirichlet_fast(benchmark::State& state) {
  const auto base = walsh_base(10);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet(base, n));
}
BENCHMARK(BM_dirichlet_fast)->Arg(512)->Arg(513)->Arg(700);

void BM_dirichlet_direct_sum(benchmark::State& state) {
  const auto base = walsh_base(10);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    CellFunction acc(base);
    for (std::uint64_t k = 0; k < n; ++k) acc += vilenkin_character(base, k);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_dirichlet_direct_sum)->Arg(512)->Arg(700);

void BM_weighted_maximal_full(benchmark::State& state) {
  const auto base = walsh_base(8);
  const auto s = analyze(counterexample(base, 3));
  const auto q = make_constant_sequence(1.0);
  const auto phi = WeightFunction::paper(0.5);
  std::vector<std::uint64_t> idx(base->cell_count());
  for (std::uint64_t i = 0; i < idx.size(); ++i) idx[i] = i + 1;
  for (auto _ : state) benchmark::DoNotOptimize(weighted_maximal(s, *q, phi, idx));
}
BENCHMARK(BM_weighted_maximal_full);

void BM_part_a_sweep(benchmark::State& state) {
  CounterexampleSpec spec;
  spec.base = walsh_base(8);
  spec.k_list = {1, 2, 3};
  spec.q = make_constant_sequence(1.0);
  spec.phi = WeightFunction::one();
  spec.p = 0.5;
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(spec, 'a'));
}
BENCHMARK(BM_part_a_sweep);

}  // namespace

BENCHMARK_MAIN();
