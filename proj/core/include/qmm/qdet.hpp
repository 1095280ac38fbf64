#pragma once

#include <vector>

#include "qmm/matrix.hpp"
#include "qmm/relations.hpp"

namespace qmm {

/// The generic r x r symbol matrix A with A[i][j] = a[i+1,j+1].
SquareMatrix<NCPoly> generic_matrix(int rank);

/// All subsets of {0..rank-1} in bitmask order (deterministic; the empty
/// subset first).  Each subset is an ascending index list.
std::vector<std::vector<int>> all_subsets(int rank);

/// Fermionic side: sum over subsets J of (-1)^{|J|} qdet(A_J), where A_J is
/// the principal submatrix on rows and columns J.  The empty subset
/// contributes 1.
NCPoly ferm(int rank);

/// Outcome of one determinant-identity check, with the membership evidence
/// (empty when the identity holds exactly in the free algebra).
struct DetCheck {
  bool ok = false;
  std::vector<MembershipCertificate> certificates;
};

/// Expansion along the last column holds exactly in the free algebra (no
/// relations needed):  qdet(A) = sum_i (-q)^{i-n} qdet(A_i) a[i,n]  with A_i
/// the minor deleting row i and column n.
bool column_expansion_check(int n);

/// Swapping columns i < j multiplies qdet by (-q)^{-s} modulo the
/// right-quantum ideal, where s = 2(j-i) - 1 counts the adjacent
/// transpositions in the zig-zag that realizes the swap (each contributes one
/// factor; s is also the inversion number of the transposition).  Verifies
/// qdet(A') - (-q)^{-s} qdet(A) in the ideal.
DetCheck column_swap_check(int rank, int i, int j, MembershipSolver& solver);

/// With column j < rank duplicated into the last position, the signed
/// expansion sum_i (-q)^{i-n} qdet(A_i) a[i,j] lies in the right-quantum
/// ideal (A_i deletes row i and the last column).
DetCheck equal_column_vanishing_check(int rank, int j, MembershipSolver& solver);

}  // namespace qmm
