#include <benchmark/benchmark.h>

#include "sympow/containment.hpp"
#include "sympow/corpus.hpp"
#include "sympow/frobenius.hpp"
#include "sympow/parse.hpp"

using namespace sympow;

namespace {

RingPtr ring3() { return Ring::make(2, {"x", "y", "z"}); }

SquarefreeIdeal triangle(const RingPtr& ring) {
  return SquarefreeIdeal(ring, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
}

void BM_Buchberger(benchmark::State& state) {
  const RingPtr ring = Ring::make(3, {"x", "y", "z"});
  const std::vector<Polynomial> gens = {
      parse_polynomial(ring, "x^2*y - z^2"),
      parse_polynomial(ring, "y^3 + x*z"),
      parse_polynomial(ring, "x*y*z - 1"),
  };
  for (auto _ : state) {
    Ideal I(ring, gens);  // fresh ideal: no basis cache
    benchmark::DoNotOptimize(I.groebner().elements.size());
  }
}
BENCHMARK(BM_Buchberger);

void BM_SymbolicPower(benchmark::State& state) {
  const RingPtr ring = ring3();
  SquarefreeIdeal tri = triangle(ring);
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(tri.symbolic_power(m).gens().size());
}
BENCHMARK(BM_SymbolicPower)->Arg(2)->Arg(4)->Arg(8);

void BM_TauChain(benchmark::State& state) {
  const RingPtr ring = ring3();
  MonomialIdeal a = triangle(ring).symbolic_power(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(tau_monomial_power(a, 3, 2, 4).value.gens());
}
BENCHMARK(BM_TauChain);

void BM_VerifySweepSlice(benchmark::State& state) {
  const RingPtr ring = ring3();
  const auto corpus = all_squarefree_ideals(ring);
  for (auto _ : state) {
    int holds = 0;
    for (const auto& I : corpus)
      holds += verify_main(I, 1, 0, MainVariant::A).verdict == Verdict::Holds;
    benchmark::DoNotOptimize(holds);
  }
}
BENCHMARK(BM_VerifySweepSlice);

void BM_ColonClaim(benchmark::State& state) {
  const RingPtr ring = ring3();
  SquarefreeIdeal tri = triangle(ring);
  for (auto _ : state)
    benchmark::DoNotOptimize(check_colon_claim(tri, 1).verdict);
}
BENCHMARK(BM_ColonClaim);

}  // namespace

BENCHMARK_MAIN();
