#include <benchmark/benchmark.h>

#include "ptol/ptol.hpp"

namespace {

ptol::PosetPtr boolean_lattice() { return std::make_shared<ptol::Poset const>(ptol::make_boolean_lattice(3)); }

void BM_CheckTolerance(benchmark::State& state) {
  ptol::PosetPtr const p = boolean_lattice();
  std::vector<ptol::Tolerance> const ts = ptol::enumerate_2uniform(p);
  for (auto _ : state) {
    for (ptol::Tolerance const& t : ts) {
      benchmark::DoNotOptimize(ptol::check_tolerance(*p, t.relation()));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(ts.size()));
}
BENCHMARK(BM_CheckTolerance);

void BM_Enumerate2Uniform(benchmark::State& state) {
  auto const p = std::make_shared<ptol::Poset const>(ptol::make_chain(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ptol::enumerate_2uniform(p));
  }
}
BENCHMARK(BM_Enumerate2Uniform)->Arg(4)->Arg(8)->Arg(16);

void BM_EnumerateBruteForce(benchmark::State& state) {
  auto const p = std::make_shared<ptol::Poset const>(ptol::make_chain(5));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ptol::enumerate_2uniform_brute_force(p));
  }
}
BENCHMARK(BM_EnumerateBruteForce);

void BM_VerifyTheorem(benchmark::State& state) {
  ptol::PosetCorpus const corpus = ptol::generate_posets(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ptol::verify_theorem(corpus));
  }
  state.counters["posets"] = static_cast<double>(corpus.posets.size());
}
BENCHMARK(BM_VerifyTheorem)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_GeneratePosets(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ptol::generate_posets(static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_GeneratePosets)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
