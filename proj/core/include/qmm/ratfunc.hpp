#pragma once

#include <string>

#include "qmm/laurent.hpp"

namespace qmm {

/// Element of Q(q) held as a reduced fraction of Laurent polynomials.
///
/// Canonical form: the denominator is an ordinary polynomial with nonzero
/// constant term (min_exp 0), positive leading coefficient, and no common
/// factor — integer or polynomial — with the numerator.  All q^k unit freedom
/// is pushed into the numerator, so structural equality is semantic equality.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(int c) : num_(c), den_(1) {}
  RatFunc(LaurentPoly num) : num_(std::move(num)), den_(1) {}
  RatFunc(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  /// Reciprocal; throws std::domain_error on zero.
  RatFunc inv() const;

  /// Evaluate at a nonzero rational q0; throws std::domain_error if q0 is a
  /// pole (denominator vanishes) and std::invalid_argument if q0 == 0.
  Rational eval(const Rational& q0) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  /// "num / den" with both halves in LaurentPoly grammar.
  std::string str() const;

 private:
  LaurentPoly num_, den_;
  void reduce();
};

}  // namespace qmm
