#include "qmm/qdet.hpp"

#include <stdexcept>

namespace qmm {

SquareMatrix<NCPoly> generic_matrix(int rank) {
  SquareMatrix<NCPoly> m(rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) m.at(i, j) = nc_gen(i + 1, j + 1);
  return m;
}

std::vector<std::vector<int>> all_subsets(int rank) {
  std::vector<std::vector<int>> out;
  out.reserve(std::size_t(1) << rank);
  for (unsigned mask = 0; mask < (1u << rank); ++mask) {
    std::vector<int> J;
    for (int i = 0; i < rank; ++i)
      if (mask & (1u << i)) J.push_back(i);
    out.push_back(std::move(J));
  }
  return out;
}

NCPoly ferm(int rank) {
  if (rank < 1) throw std::invalid_argument("ferm: rank must be >= 1");
  SquareMatrix<NCPoly> A = generic_matrix(rank);
  NCPoly out;
  for (const auto& J : all_subsets(rank)) {
    NCPoly det = qdet(submatrix(A, J, J));
    if (J.size() % 2) det = -det;
    out += det;
  }
  return out;
}

bool column_expansion_check(int n) {
  if (n < 1) throw std::invalid_argument("column_expansion_check: n must be >= 1");
  SquareMatrix<NCPoly> A = generic_matrix(n);
  NCPoly lhs = qdet(A);
  NCPoly rhs;
  std::vector<int> cols(n - 1);
  for (int c = 0; c < n - 1; ++c) cols[c] = c;
  for (int i = 0; i < n; ++i) {
    std::vector<int> rows;
    for (int r = 0; r < n; ++r)
      if (r != i) rows.push_back(r);
    NCPoly minor = qdet(submatrix(A, rows, cols));
    // (-q)^{i-n} with 1-based row index i+1
    int e = (i + 1) - n;
    minor.scale(LaurentPoly::term((-e) % 2 ? -1 : 1, e));
    rhs += minor * nc_gen(i + 1, n);
  }
  return lhs == rhs;
}

DetCheck column_swap_check(int rank, int i, int j, MembershipSolver& solver) {
  if (!(1 <= i && i < j && j <= rank))
    throw std::invalid_argument("column_swap_check: need 1 <= i < j <= rank");
  SquareMatrix<NCPoly> A = generic_matrix(rank);
  SquareMatrix<NCPoly> Aswap = A;
  for (int r = 0; r < rank; ++r) std::swap(Aswap.at(r, i - 1), Aswap.at(r, j - 1));
  const int s = 2 * (j - i) - 1;
  NCPoly target = qdet(Aswap) - qdet(A).scaled(LaurentPoly::term(s % 2 ? -1 : 1, -s));
  DetCheck out;
  out.ok = solver.zero_mod_ideal(target, &out.certificates);
  return out;
}

DetCheck equal_column_vanishing_check(int rank, int j, MembershipSolver& solver) {
  if (!(1 <= j && j < rank))
    throw std::invalid_argument("equal_column_vanishing_check: need 1 <= j < rank");
  SquareMatrix<NCPoly> A = generic_matrix(rank);
  std::vector<int> cols(rank - 1);
  for (int c = 0; c < rank - 1; ++c) cols[c] = c;
  NCPoly target;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> rows;
    for (int r = 0; r < rank; ++r)
      if (r != i) rows.push_back(r);
    NCPoly minor = qdet(submatrix(A, rows, cols));
    int e = (i + 1) - rank;
    minor.scale(LaurentPoly::term((-e) % 2 ? -1 : 1, e));
    target += minor * nc_gen(i + 1, j);
  }
  DetCheck out;
  out.ok = solver.zero_mod_ideal(target, &out.certificates);
  return out;
}

}  // namespace qmm
