#pragma once

#include <map>
#include <vector>

#include "qmm/poly.hpp"

namespace qmm {

/// Commutative polynomial over Z in a fixed number of variables, truncated to
/// a total-degree cap: products silently drop monomials above the cap.  This
/// is the classical (q = 1) shadow used to cross-check the quantum identities
/// against ordinary power-series inversion.
class CommPoly {
 public:
  CommPoly(int nvars, int maxdeg) : nvars_(nvars), maxdeg_(maxdeg) {}

  static CommPoly constant(int nvars, int maxdeg, const Int& c);
  static CommPoly variable(int nvars, int maxdeg, int idx);

  int nvars() const { return nvars_; }
  int maxdeg() const { return maxdeg_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<std::vector<int>, Int>& terms() const { return terms_; }

  void add_term(const std::vector<int>& expo, const Int& c);

  CommPoly& operator+=(const CommPoly& o);
  CommPoly& operator-=(const CommPoly& o);
  friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
  friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
  CommPoly& operator*=(const CommPoly& o) { return *this = *this * o; }

  friend bool operator==(const CommPoly& a, const CommPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const CommPoly& a, const CommPoly& b) { return !(a == b); }

 private:
  int nvars_;
  int maxdeg_;
  std::map<std::vector<int>, Int> terms_;
};

/// Abelianization at q = 1: send each generator a[i,j] to the commutative
/// variable with index (i-1)*rank + (j-1) and every coefficient to its value
/// at q = 1.  The result lives in rank^2 variables with the given cap.
CommPoly specialize_q1_commutative(const NCPoly& p, int rank, int maxdeg);

}  // namespace qmm
