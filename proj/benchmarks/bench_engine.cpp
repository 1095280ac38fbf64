// Engine microbenchmarks: product expansion, determinants, rewriting and the
// two ideal-membership backends.

#include <benchmark/benchmark.h>

#include "qmm/bosonic.hpp"
#include "qmm/qdet.hpp"
#include "qmm/relations.hpp"

using namespace qmm;

static void BM_XProductExpansion(benchmark::State& state) {
  const int rank = static_cast<int>(state.range(0));
  const XVec m(static_cast<std::size_t>(rank), 2);
  for (auto _ : state) {
    XProductCache cache(rank);  // fresh cache: measure the expansion itself
    benchmark::DoNotOptimize(cache.product(m));
  }
}
BENCHMARK(BM_XProductExpansion)->Arg(2)->Arg(3);

static void BM_QdetGeneric(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SquareMatrix<NCPoly> A = generic_matrix(n);
  for (auto _ : state) benchmark::DoNotOptimize(qdet(A));
}
BENCHMARK(BM_QdetGeneric)->Arg(3)->Arg(4);

static void BM_FermAssembly(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ferm(3));
}
BENCHMARK(BM_FermAssembly);

static void BM_RewriteNormalForm(benchmark::State& state) {
  // Fully descending word of the given length: worst-case rewriting descent.
  const int len = static_cast<int>(state.range(0));
  RelationSet rs = full_quantum_relations(2);
  Word w;
  const Gen gens[4] = {Gen{2, 2}, Gen{2, 1}, Gen{1, 2}, Gen{1, 1}};
  for (int k = 0; k < len; ++k) w.push_back(gens[k % 4]);
  NCPoly p = NCPoly::monomial(w);
  for (auto _ : state) benchmark::DoNotOptimize(rewrite_normal_form(p, rs));
}
BENCHMARK(BM_RewriteNormalForm)->Arg(4)->Arg(6)->Arg(8);

static void BM_MembershipBasisBuild(benchmark::State& state) {
  // Cost of echelonizing one graded spanning set from scratch (exact).
  const int degree = static_cast<int>(state.range(0));
  RelationSet rs = right_quantum_relations(2);
  NCPoly query = NCPoly::monomial(Word(static_cast<std::size_t>(degree), Gen{1, 1}));
  for (auto _ : state) {
    MembershipSolver solver(rs, ArithMode::Exact, 3, 42);
    benchmark::DoNotOptimize(solver.member(query));
  }
}
BENCHMARK(BM_MembershipBasisBuild)->Arg(3)->Arg(4)->Arg(5);

static void BM_MembershipQuery(benchmark::State& state) {
  // Marginal cost of one more query against a prebuilt degree basis.
  RelationSet rs = right_quantum_relations(2);
  MembershipSolver solver(rs, ArithMode::Exact, 3, 42);
  const NCPoly& g = rs.generators[2];
  NCPoly u = nc_gen(1, 2) * nc_gen(2, 1);
  NCPoly query = u * g;  // degree 4 member
  solver.member(query);  // warm the degree-4 basis
  for (auto _ : state) benchmark::DoNotOptimize(solver.member(query));
}
BENCHMARK(BM_MembershipQuery);

static void BM_MembershipProbabilistic(benchmark::State& state) {
  RelationSet rs = right_quantum_relations(3);
  NCPoly query = NCPoly::monomial(Word(4, Gen{1, 1}));
  for (auto _ : state) {
    MembershipSolver solver(rs, ArithMode::Probabilistic, 3, 42);
    benchmark::DoNotOptimize(solver.member(query));
  }
}
BENCHMARK(BM_MembershipProbabilistic);
