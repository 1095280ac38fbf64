// Coefficient-ring microbenchmarks: Laurent arithmetic and the rational
// function field that the exact eliminator reduces over.

#include <benchmark/benchmark.h>

#include "qmm/laurent.hpp"
#include "qmm/ratfunc.hpp"

using namespace qmm;

namespace {

LaurentPoly dense_poly(int terms, int seed) {
  LaurentPoly p;
  unsigned long long x = static_cast<unsigned long long>(seed) * 2654435761u + 1;
  for (int t = 0; t < terms; ++t) {
    x = x * 6364136223846793005ull + 1442695040888963407ull;
    p += LaurentPoly::term(static_cast<int>(x % 19) - 9, t - terms / 2);
  }
  return p;
}

}  // namespace

static void BM_LaurentMul(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  LaurentPoly a = dense_poly(n, 1), b = dense_poly(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.SetComplexityN(n);
}
BENCHMARK(BM_LaurentMul)->Arg(8)->Arg(32)->Arg(128)->Complexity();

static void BM_LaurentGcd(benchmark::State& state) {
  // Force a nontrivial common factor.
  LaurentPoly g = dense_poly(6, 3);
  LaurentPoly a = g * dense_poly(10, 4);
  LaurentPoly b = g * dense_poly(10, 5);
  for (auto _ : state) benchmark::DoNotOptimize(laurent_gcd(a, b));
}
BENCHMARK(BM_LaurentGcd);

static void BM_LaurentEval(benchmark::State& state) {
  LaurentPoly p = dense_poly(64, 6);
  const Rational pt = Rational(22) / Rational(7);
  for (auto _ : state) benchmark::DoNotOptimize(p.eval(pt));
}
BENCHMARK(BM_LaurentEval);

static void BM_RatFuncArith(benchmark::State& state) {
  RatFunc a(dense_poly(8, 7), dense_poly(5, 8));
  RatFunc b(dense_poly(8, 9), dense_poly(5, 10));
  for (auto _ : state) {
    RatFunc s = a + b;
    benchmark::DoNotOptimize(s * a);
  }
}
BENCHMARK(BM_RatFuncArith);
