#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qmm/linsolve.hpp"
#include "qmm/poly.hpp"

namespace qmm {

enum class Flavor { RightQuantum, FullQuantum, LeftQuantum };
enum class ArithMode { Exact, Probabilistic };

std::string to_string(Flavor f);
std::string to_string(ArithMode m);
Flavor flavor_from_string(const std::string& s);
ArithMode arith_from_string(const std::string& s);

/// A flavor of quadratic commutation relations on the r x r symbol matrix,
/// held as the list of degree-2 generators of the two-sided ideal they span.
struct RelationSet {
  int rank = 0;
  Flavor flavor = Flavor::RightQuantum;
  std::vector<NCPoly> generators;
};

/// Right-quantum relations: for every column, lower entries q-commute past
/// upper ones (ca = q ac), and every 2x2 submatrix (a b / c d) satisfies the
/// cross relation ad - da - q^{-1} cb + q bc = 0.
RelationSet right_quantum_relations(int rank);

/// Fully quantum relations: rows and columns q-commute, the antidiagonal of
/// every 2x2 submatrix commutes (cb = bc), plus the same cross relation.
/// Strictly contains the right-quantum set.
RelationSet full_quantum_relations(int rank);

/// Left-quantum relations (the transpose-flipped variant): rows q-commute and
/// the cross relation carries b and c exchanged (ad - da - q^{-1} bc + q cb).
RelationSet left_quantum_relations(int rank);

RelationSet make_relations(int rank, Flavor flavor);

/// Normal form under the fully quantum rewriting system, which orients every
/// relation so that the out-of-order adjacent generator pair (graded-lex)
/// rewrites to in-order terms.  Confluent on the full set; applying it to a
/// polynomial p yields the canonical representative of p mod the ideal, so
/// p lies in the ideal iff the normal form is 0.  Throws
/// std::invalid_argument for other flavors: their relation sets cannot sort
/// an arbitrary adjacent pair, so this strategy does not terminate there.
NCPoly rewrite_normal_form(const NCPoly& p, const RelationSet& rs);

/// Evidence attached to one homogeneous membership query.
struct MembershipCertificate {
  int degree = 0;
  ArithMode mode = ArithMode::Exact;
  bool verdict = false;
  std::vector<Rational> eval_points;  // empty in exact mode
  std::size_t matrix_rows = 0;        // spanning rows fed to the eliminator
  std::size_t matrix_cols = 0;        // words of that degree
  double elapsed_ms = 0.0;
};

/// Decides membership of homogeneous polynomials in the two-sided ideal
/// generated by a RelationSet, degree by degree.  At a-degree d the ideal's
/// graded piece is spanned by { u * g * v : g generator, |u| + |v| = d - 2 };
/// the solver echelonizes that span once per degree (per evaluation point in
/// probabilistic mode) and then answers queries by row reduction.  Exact mode
/// works fraction-free over Z[q, q^-1] and is a proof; probabilistic mode
/// evaluates q at `evals` distinct random rationals (drawn from a fixed-seed
/// generator, numerators and denominators in [2, 97], never equal to 1) and
/// can only err by declaring a nonmember a member, with probability bounded
/// by (degree of the clearing polynomial / choices)^evals.
class MembershipSolver {
 public:
  MembershipSolver(RelationSet rs, ArithMode mode, int evals, std::uint64_t seed);

  const RelationSet& relations() const { return rs_; }
  ArithMode mode() const { return mode_; }
  const std::vector<Rational>& eval_points() const { return points_; }

  /// p must be homogeneous (else std::invalid_argument).  The zero polynomial
  /// is a member of every degree.
  MembershipCertificate member(const NCPoly& p);

  /// Splits p - (nothing) into graded components and requires each to be a
  /// member; components of degree < 2 must be identically zero (the ideal has
  /// no nonzero elements there).
  bool zero_mod_ideal(const NCPoly& p, std::vector<MembershipCertificate>* certs = nullptr);
  bool equal_mod_ideal(const NCPoly& a, const NCPoly& b,
                       std::vector<MembershipCertificate>* certs = nullptr);

 private:
  struct DegreeBasis {
    std::unique_ptr<LaurentEchelon> exact;
    std::vector<RationalEchelon> prob;  // one per evaluation point
    std::size_t rows = 0;
    std::size_t cols = 0;
  };

  RelationSet rs_;
  ArithMode mode_;
  int evals_;
  std::vector<Rational> points_;
  std::map<int, DegreeBasis> bases_;

  const DegreeBasis& degree_basis(int d);
};

/// One-shot convenience wrapper around a throwaway solver.
MembershipCertificate ideal_member(const NCPoly& p, const RelationSet& rs, ArithMode mode,
                                   int evals = 3, std::uint64_t seed = 42);

}  // namespace qmm
