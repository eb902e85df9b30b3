// Serial against OpenMP execution of the parallel kernels. The argument of
// each benchmark selects the execution mode: 0 serial, 1 parallel.
#include <benchmark/benchmark.h>

#include "spinwreath/qtable.hpp"
#include "spinwreath/relations.hpp"

using namespace spinwreath;

namespace {

Exec mode(const benchmark::State& state) { return state.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_BuildTableTrivial10(benchmark::State& state) {
  const GammaData G = builtin_trivial();
  for (auto _ : state) {
    QFunctions Q(G);  // fresh caches each round
    benchmark::DoNotOptimize(Q.build_table(10, false, mode(state)));
  }
  label(state);
}
BENCHMARK(BM_BuildTableTrivial10)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BuildTableCyclic2n5(benchmark::State& state) {
  const GammaData G = builtin_cyclic(2);
  for (auto _ : state) {
    QFunctions Q(G);
    benchmark::DoNotOptimize(Q.build_table(5, false, mode(state)));
  }
  label(state);
}
BENCHMARK(BM_BuildTableCyclic2n5)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Heisenberg(benchmark::State& state) {
  const GammaData G = builtin_cyclic(3);
  const FockSpace F(G, mckay_xi(G));
  for (auto _ : state) benchmark::DoNotOptimize(check_heisenberg(F, 8, 7, mode(state)));
  label(state);
}
BENCHMARK(BM_Heisenberg)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Isometry(benchmark::State& state) {
  const GammaData G = builtin_cyclic(3);
  const ClassFunSpace S(G);
  const VirtualChar xi = mckay_xi(G);
  for (auto _ : state) benchmark::DoNotOptimize(check_isometry(S, xi, 5, mode(state)));
  label(state);
}
BENCHMARK(BM_Isometry)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Clifford(benchmark::State& state) {
  const GammaData G = builtin_cyclic(2);
  for (auto _ : state) {
    const TwistedSpace T(G, trivial_xi(G));
    benchmark::DoNotOptimize(check_clifford(T, CheckOptions{4, 2, mode(state)}));
  }
  label(state);
}
BENCHMARK(BM_Clifford)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
