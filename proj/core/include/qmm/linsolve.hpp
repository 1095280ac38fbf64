#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qmm/laurent.hpp"
#include "qmm/ratfunc.hpp"

namespace qmm {

/// Sparse row: (column, value) pairs sorted by column, values nonzero.
template <class F>
using SparseRow = std::vector<std::pair<std::int64_t, F>>;

/// Incremental row echelon basis over Q, pivots normalized to 1.  Used by the
/// probabilistic membership backend (one instance per evaluation point).
class RationalEchelon {
 public:
  void absorb(SparseRow<Rational> row);
  bool reduces_to_zero(const SparseRow<Rational>& row) const;
  std::size_t basis_size() const { return rows_.size(); }

 private:
  std::map<std::int64_t, SparseRow<Rational>> rows_;  // pivot column -> row
  // Reduce an accumulator against the basis; on return it is either empty
  // (linearly dependent) or its leading column has no pivot.
  void reduce(std::map<std::int64_t, Rational>& acc) const;
};

/// Incremental row echelon basis over Q(q).  Pivot rows are stored
/// fraction-free (Laurent rows, stripped of their content gcd); reduction of
/// an incoming row runs over the fraction field, touching only the support of
/// each pivot row, and clears denominators again before a leftover row is
/// installed.  Membership answers are exact.
class LaurentEchelon {
 public:
  void absorb(const SparseRow<LaurentPoly>& row);
  bool reduces_to_zero(const SparseRow<LaurentPoly>& row) const;
  std::size_t basis_size() const { return rows_.size(); }

 private:
  std::map<std::int64_t, SparseRow<LaurentPoly>> rows_;
  void reduce(std::map<std::int64_t, RatFunc>& acc) const;
  static void strip(SparseRow<LaurentPoly>& row);
};

}  // namespace qmm
