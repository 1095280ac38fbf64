#include <doctest.h>

#include <random>
#include <stdexcept>

#include "qmm/relations.hpp"
#include "qmm/commutative.hpp"

using namespace qmm;

namespace {

const LaurentPoly kQ = LaurentPoly::q_power(1);
const LaurentPoly kQi = LaurentPoly::q_power(-1);

NCPoly word(std::initializer_list<Gen> gens) {
  return NCPoly::monomial(Word(gens));
}

NCPoly random_homogeneous(std::mt19937_64& rng, int rank, int degree, int terms) {
  NCPoly p;
  for (int t = 0; t < terms; ++t) {
    Word w;
    for (int k = 0; k < degree; ++k)
      w.push_back(Gen{1 + static_cast<int>(rng() % static_cast<unsigned>(rank)),
                      1 + static_cast<int>(rng() % static_cast<unsigned>(rank))});
    p.add_term(w, LaurentPoly::term(static_cast<int>(rng() % 5) - 2,
                                    static_cast<int>(rng() % 5) - 2));
  }
  return p;
}

Word random_word(std::mt19937_64& rng, int rank, int len) {
  Word w;
  for (int k = 0; k < len; ++k)
    w.push_back(Gen{1 + static_cast<int>(rng() % static_cast<unsigned>(rank)),
                    1 + static_cast<int>(rng() % static_cast<unsigned>(rank))});
  return w;
}

}  // namespace

TEST_CASE("generator counts by flavor and rank") {
  // Columns contribute r*C(r,2) ordered pairs, the cross relation C(r,2)^2.
  CHECK(right_quantum_relations(1).generators.empty());
  CHECK(right_quantum_relations(2).generators.size() == 3);
  CHECK(right_quantum_relations(3).generators.size() == 18);
  CHECK(right_quantum_relations(4).generators.size() == 4 * 6 + 36);
  // The full flavor adds rows (r*C(r,2)) and antidiagonal pairs (C(r,2)^2).
  CHECK(full_quantum_relations(2).generators.size() == 6);
  CHECK(full_quantum_relations(3).generators.size() == 36);
  // The left flavor mirrors the right one in size.
  CHECK(left_quantum_relations(2).generators.size() == 3);
  CHECK(left_quantum_relations(3).generators.size() == 18);

  for (Flavor f : {Flavor::RightQuantum, Flavor::FullQuantum, Flavor::LeftQuantum}) {
    RelationSet rs = make_relations(3, f);
    CHECK(rs.rank == 3);
    CHECK(rs.flavor == f);
    for (const NCPoly& g : rs.generators) {
      int d = -1;
      CHECK(is_homogeneous(g, &d));
      CHECK(d == 2);
    }
  }
}

TEST_CASE("flavor and arithmetic-mode names round-trip") {
  for (Flavor f : {Flavor::RightQuantum, Flavor::FullQuantum, Flavor::LeftQuantum})
    CHECK(flavor_from_string(to_string(f)) == f);
  for (ArithMode m : {ArithMode::Exact, ArithMode::Probabilistic})
    CHECK(arith_from_string(to_string(m)) == m);
  CHECK_THROWS_AS(flavor_from_string("bogus"), std::invalid_argument);
  CHECK_THROWS_AS(arith_from_string("bogus"), std::invalid_argument);
}

TEST_CASE("rewriting orients each defining relation") {
  RelationSet rs = full_quantum_relations(2);
  const Gen a{1, 1}, b{1, 2}, c{2, 1}, d{2, 2};

  // Column: c a -> q a c.   Row: b a -> q a b.
  CHECK(rewrite_normal_form(word({c, a}), rs) ==
        NCPoly::monomial({a, c}, kQ));
  CHECK(rewrite_normal_form(word({b, a}), rs) ==
        NCPoly::monomial({a, b}, kQ));
  CHECK(rewrite_normal_form(word({d, b}), rs) ==
        NCPoly::monomial({b, d}, kQ));
  CHECK(rewrite_normal_form(word({d, c}), rs) ==
        NCPoly::monomial({c, d}, kQ));
  // Antidiagonal: c b -> b c with no weight.
  CHECK(rewrite_normal_form(word({c, b}), rs) == word({b, c}));
  // Cross: d a -> a d + (q - q^-1) b c.
  CHECK(rewrite_normal_form(word({d, a}), rs) ==
        word({a, d}) + NCPoly::monomial({b, c}, kQ - kQi));
  // Sorted words are already normal.
  CHECK(rewrite_normal_form(word({a, b, c, d}), rs) == word({a, b, c, d}));
}

TEST_CASE("normal forms are idempotent and kill the ideal") {
  std::mt19937_64 rng(59);
  for (int rank : {2, 3}) {
    RelationSet rs = full_quantum_relations(rank);
    for (const NCPoly& g : rs.generators)
      CHECK(rewrite_normal_form(g, rs).is_zero());
    for (int t = 0; t < 25; ++t) {
      NCPoly p = random_homogeneous(rng, rank, 1 + static_cast<int>(rng() % 4), 3);
      NCPoly nf = rewrite_normal_form(p, rs);
      CHECK(rewrite_normal_form(nf, rs) == nf);
      // Rewriting is linear and multiplicative mod the ideal: sandwiching a
      // generator between random words still rewrites to zero.
      const NCPoly& g = rs.generators[rng() % rs.generators.size()];
      NCPoly u = NCPoly::monomial(random_word(rng, rank, static_cast<int>(rng() % 3)));
      NCPoly v = NCPoly::monomial(random_word(rng, rank, static_cast<int>(rng() % 3)));
      CHECK(rewrite_normal_form(u * g * v, rs).is_zero());
      // And compatible with products: NF(p*w) == NF(NF(p)*w).
      NCPoly w = NCPoly::monomial(random_word(rng, rank, 2));
      CHECK(rewrite_normal_form(p * w, rs) == rewrite_normal_form(nf * w, rs));
    }
  }
}

TEST_CASE("rewriting requires the fully quantum flavor") {
  CHECK_THROWS_AS(rewrite_normal_form(nc_gen(1, 1), right_quantum_relations(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(rewrite_normal_form(nc_gen(1, 1), left_quantum_relations(2)),
                  std::invalid_argument);
}

TEST_CASE("membership accepts exactly the ideal, both arithmetic backends") {
  std::mt19937_64 rng(61);
  for (int rank : {2, 3}) {
    for (Flavor flavor : {Flavor::RightQuantum, Flavor::FullQuantum}) {
      RelationSet rs = make_relations(rank, flavor);
      MembershipSolver exact(rs, ArithMode::Exact, 3, 42);
      MembershipSolver prob(rs, ArithMode::Probabilistic, 3, 42);

      for (const NCPoly& g : rs.generators) {
        CHECK(exact.member(g).verdict);
        CHECK(prob.member(g).verdict);
      }

      // Sandwiched generators and their combinations are members.
      for (int t = 0; t < 10; ++t) {
        NCPoly p;
        const int extra = static_cast<int>(rng() % 3);
        for (int s = 0; s < 2; ++s) {
          const NCPoly& g = rs.generators[rng() % rs.generators.size()];
          int left = static_cast<int>(rng() % static_cast<unsigned>(extra + 1));
          NCPoly u = NCPoly::monomial(random_word(rng, rank, left));
          NCPoly v = NCPoly::monomial(random_word(rng, rank, extra - left));
          p += u * g * v.scaled(LaurentPoly::term(1 + static_cast<int>(rng() % 3),
                                                  static_cast<int>(rng() % 5) - 2));
        }
        CHECK(exact.member(p).verdict);
        CHECK(prob.member(p).verdict);
      }

      // Any single word is outside the ideal: every generator vanishes under
      // the commutative specialization at q = 1, so members do too, while a
      // word maps to a nonzero commutative monomial.
      for (int d = 1; d <= 4; ++d) {
        NCPoly w = NCPoly::monomial(random_word(rng, rank, d));
        CHECK(specialize_q1_commutative(w, rank, d).is_zero() == false);
        CHECK_FALSE(exact.member(w).verdict);
        CHECK_FALSE(prob.member(w).verdict);
      }
    }
  }
}

TEST_CASE("membership certificates expose the work done") {
  RelationSet rs = right_quantum_relations(2);
  MembershipSolver exact(rs, ArithMode::Exact, 3, 42);
  MembershipCertificate cert = exact.member(rs.generators[0]);
  CHECK(cert.verdict);
  CHECK(cert.degree == 2);
  CHECK(cert.mode == ArithMode::Exact);
  CHECK(cert.eval_points.empty());
  // Degree-2 span: 3 generators over 16 words of degree 2.
  CHECK(cert.matrix_rows == 3);
  CHECK(cert.matrix_cols == 16);

  MembershipSolver prob(rs, ArithMode::Probabilistic, 4, 7);
  MembershipCertificate pcert = prob.member(rs.generators[0]);
  CHECK(pcert.mode == ArithMode::Probabilistic);
  CHECK(pcert.eval_points.size() == 4);
  for (const Rational& pt : pcert.eval_points) {
    CHECK(pt != 0);
    CHECK(pt != 1);
  }
  // Distinct points, reproducible from the seed.
  MembershipSolver prob2(rs, ArithMode::Probabilistic, 4, 7);
  CHECK(prob.eval_points() == prob2.eval_points());
  for (std::size_t i = 0; i < pcert.eval_points.size(); ++i)
    for (std::size_t j = i + 1; j < pcert.eval_points.size(); ++j)
      CHECK(pcert.eval_points[i] != pcert.eval_points[j]);
}

TEST_CASE("membership validates its inputs") {
  RelationSet rs = right_quantum_relations(2);
  MembershipSolver solver(rs, ArithMode::Exact, 3, 42);
  // Inhomogeneous queries are rejected; use zero_mod_ideal for those.
  CHECK_THROWS_AS(solver.member(nc_one() + nc_gen(1, 1)), std::invalid_argument);
  // Generator indices outside the rank are rejected.
  CHECK_THROWS_AS(solver.member(nc_gen(3, 1) * nc_gen(1, 1)), std::invalid_argument);
  // The zero polynomial is a member; nonzero low degrees are not.
  CHECK(solver.member(NCPoly()).verdict);
  CHECK_FALSE(solver.member(nc_one()).verdict);
  CHECK_FALSE(solver.member(nc_gen(1, 2)).verdict);
}

TEST_CASE("zero_mod_ideal splits into graded components") {
  RelationSet rs = right_quantum_relations(2);
  MembershipSolver solver(rs, ArithMode::Exact, 3, 42);
  const NCPoly& g = rs.generators[0];
  NCPoly mixed = g + nc_gen(1, 1) * g;  // degrees 2 and 3, both members
  std::vector<MembershipCertificate> certs;
  CHECK(solver.zero_mod_ideal(mixed, &certs));
  CHECK(certs.size() == 2);
  CHECK(certs[0].degree == 2);
  CHECK(certs[1].degree == 3);

  CHECK_FALSE(solver.zero_mod_ideal(nc_one() + g));  // degree-0 residue
  CHECK(solver.zero_mod_ideal(NCPoly()));

  // Equality mod the ideal: c a and q a c differ by a generator.
  NCPoly ca = nc_gen(2, 1) * nc_gen(1, 1);
  NCPoly ac = nc_gen(1, 1) * nc_gen(2, 1);
  CHECK(solver.equal_mod_ideal(ca, ac.scaled(kQ)));
  CHECK_FALSE(solver.equal_mod_ideal(ca, ac));
}

TEST_CASE("rank-1 relation sets are empty, so only zero is a member") {
  for (Flavor flavor : {Flavor::RightQuantum, Flavor::FullQuantum}) {
    MembershipSolver solver(make_relations(1, flavor), ArithMode::Exact, 3, 42);
    CHECK(solver.member(NCPoly()).verdict);
    NCPoly p = nc_gen(1, 1) * nc_gen(1, 1);
    CHECK_FALSE(solver.member(p).verdict);
    CHECK(solver.zero_mod_ideal(p - p));
  }
}

TEST_CASE("one-shot membership wrapper matches a dedicated solver") {
  RelationSet rs = right_quantum_relations(2);
  MembershipSolver solver(rs, ArithMode::Exact, 3, 42);
  const NCPoly& g = rs.generators[2];
  MembershipCertificate a = ideal_member(g, rs, ArithMode::Exact);
  MembershipCertificate b = solver.member(g);
  CHECK(a.verdict == b.verdict);
  CHECK(a.matrix_rows == b.matrix_rows);
  CHECK(a.matrix_cols == b.matrix_cols);
  CHECK_FALSE(ideal_member(nc_gen(1, 1) * nc_gen(2, 2), rs, ArithMode::Probabilistic,
                           3, 42).verdict);
}

TEST_CASE("exact and probabilistic verdicts agree on stress samples") {
  std::mt19937_64 rng(67);
  RelationSet rs = right_quantum_relations(2);
  MembershipSolver exact(rs, ArithMode::Exact, 3, 42);
  MembershipSolver prob(rs, ArithMode::Probabilistic, 3, 42);
  for (int t = 0; t < 60; ++t) {
    const int d = 2 + static_cast<int>(rng() % 3);
    NCPoly p = random_homogeneous(rng, 2, d, 2);
    if (rng() % 2) {
      const NCPoly& g = rs.generators[rng() % rs.generators.size()];
      NCPoly u = NCPoly::monomial(random_word(rng, 2, d - 2));
      p = u * g;  // definite member
    }
    CHECK(exact.member(p).verdict == prob.member(p).verdict);
  }
}
