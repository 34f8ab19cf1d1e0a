#include <benchmark/benchmark.h>

#include "covsim/distinguisher.hpp"
#include "covsim/oracle.hpp"
#include "covsim/random_systems.hpp"

using namespace covsim;

namespace {

Lts system_of(std::size_t states) { return random_lts(states, states, random_alphabet(states, 3), 1.5); }

PreorderKind kind_of(std::int64_t i) { return static_cast<PreorderKind>(i); }

void BM_GreatestRelation(benchmark::State& st) {
  const auto lts = system_of(static_cast<std::size_t>(st.range(0)));
  const auto kind = kind_of(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(greatest_relation(kind, lts));
  st.SetLabel(std::string(to_string(kind)));
}
BENCHMARK(BM_GreatestRelation)->ArgsProduct({{8, 32, 128}, {0, 1, 2}});

void BM_Saturate(benchmark::State& st) {
  const auto lts = system_of(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(saturate(lts, Fragment::CC, default_max_level(lts)));
}
BENCHMARK(BM_Saturate)->Arg(3)->Arg(4)->Arg(6);

// Formulas for every dead pair, one memo table per iteration.
void BM_DistinguishAll(benchmark::State& st) {
  const auto lts = system_of(static_cast<std::size_t>(st.range(0)));
  const auto rel = greatest_relation(kind_of(st.range(1)), lts);
  for (auto _ : st) {
    Distinguisher dist(lts, rel);
    for (StateId p = 0; p < lts.size(); ++p)
      for (StateId q = 0; q < lts.size(); ++q) benchmark::DoNotOptimize(dist(p, q));
  }
}
BENCHMARK(BM_DistinguishAll)->ArgsProduct({{8, 32, 64}, {1, 2}});

}  // namespace

// The packaged benchmark_main archive carries LTO bytecode from another
// compiler release, so main is defined here.
BENCHMARK_MAIN();
