#include <benchmark/benchmark.h>

#include "loewner_lab/ffn.hpp"
#include "loewner_lab/matcore.hpp"
#include "loewner_lab/rng.hpp"
#include "loewner_lab/search.hpp"
#include "loewner_lab/theorems.hpp"

using namespace loewner_lab;

static void BM_Eigh(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  RandomStream rng(1);
  const SymMatrix a = random_pd(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(eigh(a));
}
BENCHMARK(BM_Eigh)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

static void BM_MatPow(benchmark::State& state) {
  RandomStream rng(2);
  const SymMatrix a = random_pd(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(mat_pow(a, 0.37));
}
BENCHMARK(BM_MatPow)->Arg(4)->Arg(16);

static void BM_GrandLhs(benchmark::State& state) {
  RandomStream rng(3);
  const SymMatrix a = random_pd(6, rng);
  const SymMatrix b = random_pd(6, rng);
  const auto params = ChainParams::grand(1, 2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(grand_lhs(a, b, params));
}
BENCHMARK(BM_GrandLhs)->Arg(2)->Arg(3)->Arg(5)->Arg(8);

static void BM_VerifyTheorem(benchmark::State& state) {
  const auto params = ChainParams::grand(1, 4, 2);
  SampleSpec spec{static_cast<std::size_t>(state.range(0)), params, Strategy::ScaledRandom, 4, 1000,
                  suggested_spread(params)};
  const MatrixPair pair = sample_pair(spec);
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem(pair.a, pair.b, params));
}
BENCHMARK(BM_VerifyTheorem)->Arg(3)->Arg(6);

static void BM_ProofTrace(benchmark::State& state) {
  const auto params = ChainParams::grand(1, 2, 3);
  SampleSpec spec{6, params, Strategy::ScaledRandom, 5, 1000, suggested_spread(params)};
  const MatrixPair pair = sample_pair(spec);
  for (auto _ : state) benchmark::DoNotOptimize(proof_trace_grand(pair.a, pair.b, params));
}
BENCHMARK(BM_ProofTrace);

static void BM_Sampler(benchmark::State& state) {
  const auto params = ChainParams::grand(1, 2, 3);
  const auto strategy = static_cast<Strategy>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    SampleSpec spec{4, params, strategy, seed++, 1000, suggested_spread(params)};
    benchmark::DoNotOptimize(sample_pair(spec));
  }
  state.SetLabel(std::string(to_string(strategy)));
}
BENCHMARK(BM_Sampler)
    ->Arg(static_cast<int>(Strategy::Commuting))
    ->Arg(static_cast<int>(Strategy::ScaledRandom))
    ->Arg(static_cast<int>(Strategy::RejectionRandom));

static void BM_Hunt(benchmark::State& state) {
  const auto params = ChainParams::grand(2, Rational(5, 2), 2);
  for (auto _ : state) {
    SampleSpec spec{3, params, Strategy::ScaledRandom, 7, 256, kDefaultSpread};
    benchmark::DoNotOptimize(hunt_counterexample(spec, HuntTarget::Chaotic));
  }
  state.SetItemsProcessed(state.iterations() * 256);
}
BENCHMARK(BM_Hunt)->UseRealTime();
BENCHMARK_MAIN();
