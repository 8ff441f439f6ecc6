#include <benchmark/benchmark.h>

#include <random>

#include "ospcent/linalg.hpp"
#include "ospcent/modular.hpp"

using namespace ospcent;

namespace {

MatrixQ random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 8);
  MatrixQ m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(num(rng), den(rng));
  return m;
}

}  // namespace

static void BM_RationalMatMul(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  MatrixQ a = random_matrix(n, 1), b = random_matrix(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_RationalMatMul)->Arg(27)->Arg(64)->Arg(125);

static void BM_ModularMatMul(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  MatrixP a = modular_view(random_matrix(n, 1), kPrimeA);
  MatrixP b = modular_view(random_matrix(n, 2), kPrimeA);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_ModularMatMul)->Arg(125)->Arg(343);

static void BM_Rank(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  MatrixQ a = random_matrix(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(rank(a));
}
BENCHMARK(BM_Rank)->Arg(15)->Arg(40);

static void BM_MinPoly(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<Rational> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = Rational(static_cast<long>(i % 5));
  MatrixQ a = MatrixQ::diagonal(diag);
  for (auto _ : state) benchmark::DoNotOptimize(min_poly(a));
}
BENCHMARK(BM_MinPoly)->Arg(27)->Arg(125);
