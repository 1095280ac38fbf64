#pragma once

#include <algorithm>
#include <cassert>
#include <numeric>
#include <vector>

#include "qmm/poly.hpp"

namespace qmm {

template <class P>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n) {}

  int size() const { return n_; }
  P& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }  // 0-based
  const P& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }

 private:
  int n_ = 0;
  std::vector<P> e_;
};

inline int inversions(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv;
}

/// Quantum determinant: sum over permutations of (-q)^{-inv(pi)} times the
/// column-ordered entry product  M[pi(1),1] M[pi(2),2] ... M[pi(n),n].
/// Entry products are taken left to right, so this is meaningful for
/// noncommutative entry rings (free algebra, operator algebra).  `unit` is
/// returned for the empty matrix (the empty-product convention).
template <class P>
P qdet(const SquareMatrix<P>& m, const P& unit) {
  const int n = m.size();
  if (n == 0) return unit;
  P out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const int inv = inversions(perm);
    P prod = m.at(perm[0], 0);
    for (int c = 1; c < n; ++c) prod = prod * m.at(perm[c], c);
    LaurentPoly sign = LaurentPoly::term(inv % 2 ? -1 : 1, -inv);
    prod.scale(sign);
    out += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline NCPoly qdet(const SquareMatrix<NCPoly>& m) { return qdet(m, nc_one()); }

/// Submatrix selected by 0-based row and column index lists (kept in order).
template <class P>
SquareMatrix<P> submatrix(const SquareMatrix<P>& m, const std::vector<int>& rows,
                          const std::vector<int>& cols) {
  assert(rows.size() == cols.size());
  SquareMatrix<P> out(static_cast<int>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out.at(static_cast<int>(i), static_cast<int>(j)) = m.at(rows[i], cols[j]);
  return out;
}

}  // namespace qmm
