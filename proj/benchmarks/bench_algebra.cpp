#include <benchmark/benchmark.h>

#include "ospcent/bratteli.hpp"
#include "ospcent/brauer.hpp"
#include "ospcent/closure.hpp"
#include "ospcent/tensor.hpp"

using namespace ospcent;

static void BM_DiagramCompose(benchmark::State& state) {
  const auto& basis = enumerate_basis();
  for (auto _ : state)
    for (const auto& a : basis)
      for (const auto& b : basis) benchmark::DoNotOptimize(compose_diagrams(a, b));
}
BENCHMARK(BM_DiagramCompose);

static void BM_BuildIrrep(benchmark::State& state) {
  int two_j = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(build_irrep({two_j, Parity::plus}));
}
BENCHMARK(BM_BuildIrrep)->Arg(1)->Arg(6);

static void BM_FundamentalContext(benchmark::State& state) {
  IrrepLabel l{1, Parity::plus};
  for (auto _ : state) benchmark::DoNotOptimize(build_context(l, l, l));
}
BENCHMARK(BM_FundamentalContext);

static void BM_PsiClosure(benchmark::State& state) {
  PsiImages psi = psi_images();
  for (auto _ : state)
    benchmark::DoNotOptimize(unital_closure({psi.X, psi.Y}, ArithMode::Exact));
}
BENCHMARK(BM_PsiClosure);

static void BM_ClosureModular125(benchmark::State& state) {
  IrrepLabel l{2, Parity::plus};
  TensorContext ctx = build_context(l, l, l, ArithMode::Modular);
  CasimirSet cs = build_casimirs(ctx);
  BIImage bi = phi_images(cs, ctx);
  for (auto _ : state)
    benchmark::DoNotOptimize(unital_closure_mod({bi.X, bi.Y, bi.Z, bi.wX}, kPrimeA));
}
BENCHMARK(BM_ClosureModular125);

BENCHMARK_MAIN();
