#pragma once

#include <string>
#include <vector>

#include "qmm/bosonic.hpp"
#include "qmm/matrix.hpp"
#include "qmm/relations.hpp"

namespace qmm {

/// The operator matrix B with b_ii = M_i - a[i,i] and, for j != i,
/// b_ij = -q^{<c,m>} a[i,j] where the exponent vector c has entry -1 (for
/// j < i: at positions j and i, -2 strictly between; for j > i: +1 at i and
/// j, +2 strictly between).  M_i is the shift m_i -> m_i + 1, encoded in the
/// OpMonomial shift vector; q^{<c,m>} is encoded in qexp.
SquareMatrix<OpPoly> build_B(int rank);

struct OpCheck {
  bool ok = false;
  std::vector<MembershipCertificate> certificates;
  std::string residual;  // description of the first failing group, if any
};

/// x-commutation: the row forms inherit the quantum-plane relations from the
/// right-quantum ideal — for i < j,  X_j X_i - q X_i X_j  vanishes modulo the
/// ideal, componentwise over x-monomials.
OpCheck x_commutation_check(XProductCache& cache, int i, int j, MembershipSolver& solver);

/// x-scaling: x_i^{-m} X_j = (sum_k q^{c_k m} a[j,k] x_k) x_i^{-m} with
/// c_k = +1 for k > i, -1 for k < i, 0 for k = i.  Exact identity in the
/// mixed algebra (no relations), for concrete m >= 0.
bool x_scaling_check(int rank, int i, int j, int m);

/// Every 2x2 submatrix of B satisfies the right-quantum relations modulo the
/// ideal (componentwise over the operator grading).
OpCheck b_right_quantum_check(int rank, MembershipSolver& solver);

/// Two facts about the operator determinant:
/// (a) qdet(B) equals the subset sum  sum_J (-1)^{|J|} qdet(A_J) M_{Jbar}
///     (M_{Jbar} = product of the shifts outside J) modulo the ideal on
///     a-parts; groups whose q-exponent vector is nonzero must cancel
///     exactly.
/// (b) specializing every shift M_i to 1 collapses qdet(B) to ferm(A) modulo
///     the ideal.
/// `exact_in_free_algebra` reports whether (a) held exactly with no ideal
/// reduction at all — recorded as an informational sharper fact.
struct DetBCheck {
  bool ok = false;
  bool exact_in_free_algebra = false;
  std::vector<MembershipCertificate> certificates;
};
DetBCheck detq_B_expansion_check(int rank, MembershipSolver& solver);

/// H(m) = x_r^{-m_r} ... x_1^{-m_1} X_1^{m_1} ... X_r^{m_r} in the mixed
/// algebra (negative x exponents allowed).
MixedPoly build_H(XProductCache& cache, const XVec& m);

/// Annihilation: row i of B kills the H family at m, i.e.
///   x_i H(m + e_i) - a[i,i] x_i H(m) - sum_{j != i} q^{E_j(m)} a[i,j] x_j H(m)
/// lies in the ideal componentwise, where E_j(m) = <c, m> is b_ij's exponent
/// vector evaluated at the concrete m.
OpCheck annihilation_check(XProductCache& cache, const XVec& m, int i,
                           MembershipSolver& solver);

}  // namespace qmm
