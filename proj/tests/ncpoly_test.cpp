#include <doctest.h>

#include <random>
#include <stdexcept>

#include "qmm/poly.hpp"
#include "qmm/textio.hpp"

using namespace qmm;

namespace {

NCPoly random_nc(std::mt19937_64& rng, int rank, int max_terms, int max_len) {
  NCPoly p;
  const int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_terms));
  for (int t = 0; t < n; ++t) {
    Word w;
    const int len = static_cast<int>(rng() % static_cast<unsigned>(max_len + 1));
    for (int k = 0; k < len; ++k)
      w.push_back(Gen{1 + static_cast<int>(rng() % static_cast<unsigned>(rank)),
                      1 + static_cast<int>(rng() % static_cast<unsigned>(rank))});
    p.add_term(w, LaurentPoly::term(static_cast<int>(rng() % 5) - 2,
                                    static_cast<int>(rng() % 5) - 2));
  }
  return p;
}

}  // namespace

TEST_CASE("free-algebra ring laws") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 80; ++t) {
    NCPoly a = random_nc(rng, 2, 3, 3);
    NCPoly b = random_nc(rng, 2, 3, 3);
    NCPoly c = random_nc(rng, 2, 3, 3);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a - a == NCPoly());
    CHECK(a * nc_one() == a);
    CHECK(nc_one() * a == a);
  }
}

TEST_CASE("the free algebra is genuinely noncommutative") {
  NCPoly ab = nc_gen(1, 1) * nc_gen(1, 2);
  NCPoly ba = nc_gen(1, 2) * nc_gen(1, 1);
  CHECK(ab != ba);
}

TEST_CASE("terms with cancelling coefficients vanish") {
  NCPoly p = nc_gen(1, 1, LaurentPoly::q_power(2));
  p.add_term(Word{Gen{1, 1}}, -LaurentPoly::q_power(2));
  CHECK(p.is_zero());
  CHECK(p.term_count() == 0);
}

TEST_CASE("grading by word length") {
  NCPoly p = nc_one() + nc_gen(1, 2) + nc_gen(1, 1) * nc_gen(2, 2);
  CHECK(max_a_degree(p) == 2);
  CHECK(graded_component(p, 0) == nc_one());
  CHECK(graded_component(p, 1) == nc_gen(1, 2));
  CHECK(graded_component(p, 2) == nc_gen(1, 1) * nc_gen(2, 2));
  CHECK(graded_component(p, 3).is_zero());

  int d = -1;
  CHECK_FALSE(is_homogeneous(p, &d));
  CHECK(is_homogeneous(graded_component(p, 2), &d));
  CHECK(d == 2);
  CHECK(is_homogeneous(NCPoly(), &d));
  CHECK(d == 0);

  NCPoly sum;
  for (int k = 0; k <= max_a_degree(p); ++k) sum += graded_component(p, k);
  CHECK(sum == p);
}

TEST_CASE("scale multiplies every coefficient") {
  NCPoly p = nc_one() + nc_gen(2, 1);
  NCPoly doubled = p.scaled(LaurentPoly(2));
  CHECK(doubled == p + p);
  NCPoly zeroed = p.scaled(LaurentPoly());
  CHECK(zeroed.is_zero());
}

TEST_CASE("text rendering of words and polynomials") {
  CHECK(to_text(Word{}) == "1");
  CHECK(to_text(Word{Gen{1, 2}, Gen{2, 1}}) == "a[1,2] a[2,1]");
  CHECK(to_text(NCPoly()) == "0");
  CHECK(to_text(nc_one()) == "1");
  CHECK(to_text(nc_gen(1, 1)) == "a[1,1]");
  CHECK(to_text(nc_gen(1, 1, LaurentPoly::q_power(-1))) == "(1*q^-1) a[1,1]");
  NCPoly p = nc_gen(1, 1) * nc_gen(2, 2) - nc_gen(2, 2, LaurentPoly::q_power(1));
  CHECK(to_text(p) == "(-1*q^1) a[2,2]  +  a[1,1] a[2,2]");
}

TEST_CASE("text rendering of mixed monomials") {
  MixedMonomial m{{Gen{1, 2}}, {2, -1}};
  CHECK(to_text(m) == "a[1,2] x[1]^2 x[2]^-1");
  MixedMonomial bare{{}, {0, 0}};
  CHECK(to_text(bare) == "1");
  MixedMonomial xonly{{}, {0, 3}};
  CHECK(to_text(xonly) == "x[2]^3");

  // Term order compares exponent vectors lexicographically: {0,2} < {1,0}.
  MixedPoly p = x_power(1, 1, 2) + x_power(2, 2, 2).scaled(LaurentPoly(-1));
  CHECK(to_text(p) == "(-1*q^0) x[2]^2  +  x[1]^1");
}

TEST_CASE("monomial parsing round-trips and validates") {
  MixedMonomial m{{Gen{1, 2}, Gen{2, 1}}, {0, -3}};
  CHECK(parse_monomial(to_text(m), 2) == m);
  MixedMonomial unit{{}, {0, 0}};
  CHECK(parse_monomial("1", 2) == unit);
  CHECK(parse_monomial("a[2,2]", 2) == MixedMonomial{{Gen{2, 2}}, {0, 0}});
  CHECK_THROWS_AS(parse_monomial("a[0,1]", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial("a[1,3]", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial("x[3]^1", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial("b[1,1]", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial("", 2), std::invalid_argument);
  // A bare x variable means exponent 1.
  CHECK(parse_monomial("a[1,1] x[1]", 2) == MixedMonomial{{Gen{1, 1}}, {1, 0}});
  // x parts must stay normal-ordered: no generator after an x, indices ascend.
  CHECK_THROWS_AS(parse_monomial("x[1]^1 a[1,1]", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial("x[2]^1 x[1]^1", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial("x[1]^1 x[1]^2", 2), std::invalid_argument);
}

TEST_CASE("mixed splitting reassembles the polynomial") {
  std::mt19937_64 rng(47);
  const int r = 2;
  for (int t = 0; t < 40; ++t) {
    MixedPoly p;
    for (int k = 0; k < 5; ++k) {
      NCPoly w = random_nc(rng, r, 2, 2);
      XVec v = {static_cast<int>(rng() % 3) - 1, static_cast<int>(rng() % 3) - 1};
      p += mixed_embed(w, r) * MixedPoly::monomial(MixedMonomial{{}, v});
    }
    MixedPoly rebuilt;
    for (const auto& [v, nc] : split_by_x(p))
      rebuilt += mixed_embed(nc, r) * MixedPoly::monomial(MixedMonomial{{}, v});
    // Embedding the word part and re-appending x^v is exactly how the terms
    // were stored, so no crossing weights arise and the sum is on the nose.
    CHECK(rebuilt == p);
    for (const auto& [v, nc] : split_by_x(p)) CHECK(coefficient_of_x(p, v) == nc);
    CHECK(coefficient_of_x(p, XVec{9, 9}).is_zero());
  }
}

TEST_CASE("operator splitting groups by diagonal and shift parts") {
  const int r = 2;
  OpPoly p;
  p.add_term(OpMonomial{{1, 0}, {0, 1}, {Gen{1, 1}}}, LaurentPoly(2));
  p.add_term(OpMonomial{{1, 0}, {0, 1}, {Gen{1, 2}}}, LaurentPoly(1));
  p.add_term(OpMonomial{{0, 0}, {0, 1}, {Gen{1, 1}}}, LaurentPoly(1));
  auto groups = split_by_op(p);
  CHECK(groups.size() == 2);
  NCPoly big = groups.at({XVec{1, 0}, XVec{0, 1}});
  CHECK(big == nc_gen(1, 1, LaurentPoly(2)) + nc_gen(1, 2));

  // Specializing every shift to 1 merges the two shift groups.
  auto merged = specialize_shifts_to_one(p);
  CHECK(merged.size() == 2);
  CHECK(merged.at(XVec{0, 0}) == nc_gen(1, 1));
  CHECK(merged.at(XVec{1, 0}) == nc_gen(1, 1, LaurentPoly(2)) + nc_gen(1, 2));

  // Embeddings are unit-preserving.
  CHECK(op_embed(nc_one(), r) == op_one(r));
  CHECK(mixed_embed(nc_one(), r) == mixed_one(r));
}
