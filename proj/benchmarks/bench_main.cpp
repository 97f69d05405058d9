#include <benchmark/benchmark.h>

#include "arithmorse/arithmetic.hpp"
#include "arithmorse/cohomology.hpp"
#include "arithmorse/complex.hpp"
#include "arithmorse/graph.hpp"
#include "arithmorse/morse.hpp"
#include "arithmorse/topology.hpp"

using namespace arithmorse;

namespace {

const FactorSieve& sieve() {
  static const FactorSieve s(1'000'000);
  return s;
}

Graph prime(std::int64_t n) { return build_graph({GraphFamily::Prime, n}, sieve()); }

}  // namespace

static void BM_Sieve(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(FactorSieve(state.range(0)));
}
BENCHMARK(BM_Sieve)->Arg(100'000)->Arg(1'000'000);

static void BM_Cliques(benchmark::State& state) {
  const auto g = prime(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_clique(g, -1, [&](std::span<const std::uint32_t>) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_Cliques)->Arg(500)->Arg(2310);

static void BM_BoundaryRanks(benchmark::State& state) {
  const ChainComplex c(whitney_complex(prime(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(boundary_ranks_mod_prime(c, kDefaultFieldPrime));
}
BENCHMARK(BM_BoundaryRanks)->Arg(500)->Arg(2310);

static void BM_RationalRanks(benchmark::State& state) {
  const ChainComplex c(whitney_complex(prime(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(boundary_ranks_rational(c));
}
BENCHMARK(BM_RationalRanks)->Arg(250);

static void BM_InductiveDimension(benchmark::State& state) {
  const auto g = prime(state.range(0));
  for (auto _ : state) {
    FiltrationDimension fd(g);
    Rational q;
    while (!fd.done()) q = fd.add_next();
    benchmark::DoNotOptimize(q);
  }
}
BENCHMARK(BM_InductiveDimension)->Arg(500)->Arg(2690);

static void BM_Filtration(benchmark::State& state) {
  FiltrationConfig cfg;
  cfg.n_max = state.range(0);
  cfg.checkpoints = all_checkpoints(cfg.n_max);
  for (auto _ : state) benchmark::DoNotOptimize(run_filtration(cfg, sieve()));
}
BENCHMARK(BM_Filtration)->Arg(250)->Arg(2310)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
