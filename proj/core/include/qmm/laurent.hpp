#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace qmm {

using Int = mpz_class;
using Rational = mpq_class;

/// Laurent polynomial in one variable q with arbitrary-precision integer
/// coefficients.  Exponents may be negative; the zero polynomial stores no
/// terms.  This is the coefficient ring for everything downstream: every
/// identity we certify lives over Z[q, q^-1].
class LaurentPoly {
 public:
  using TermMap = std::map<int, Int>;  // exponent -> nonzero coefficient

  LaurentPoly() = default;
  LaurentPoly(int c) { if (c) terms_[0] = c; }
  LaurentPoly(const Int& c) { if (c != 0) terms_[0] = c; }

  /// c * q^e
  static LaurentPoly term(const Int& c, int e);
  /// q^e
  static LaurentPoly q_power(int e) { return term(1, e); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// Exponent bounds; undefined for the zero polynomial (asserts).
  int min_exp() const;
  int max_exp() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  const Int& coeff(int e) const;  // 0 if absent

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  /// Multiply by q^e in place (exponent shift).
  void shift(int e);
  LaurentPoly shifted(int e) const;

  LaurentPoly pow(unsigned n) const;

  /// Evaluate at a nonzero rational point.  Throws std::invalid_argument on q0 == 0
  /// (negative exponents make 0 a pole of the coefficient ring).
  Rational eval(const Rational& q0) const;
  /// Sum of coefficients, i.e. the value at q = 1 (always an integer).
  Int eval_at_one() const;

  /// gcd of all integer coefficients (non-negative; 0 for the zero polynomial).
  Int content() const;
  /// Divide every coefficient by d exactly; throws std::domain_error if not exact.
  void div_content(const Int& d);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }

  /// Render per the wire grammar: terms "c*q^e" joined by " + ", exponents
  /// descending; "0" for zero.  Examples: "1*q^2 + -1*q^0", "3*q^-1".
  std::string str() const;

 private:
  TermMap terms_;
  void add_term(int e, const Int& c);
  friend LaurentPoly laurent_gcd(const LaurentPoly&, const LaurentPoly&);
  friend LaurentPoly divexact(const LaurentPoly&, const LaurentPoly&);
};

/// Unit-normalized gcd over Z[q, q^-1]: the result has min_exp 0 and positive
/// leading coefficient, and includes the integer content gcd.  gcd(0, b) is the
/// normalization of b.  Unique up to the stated normalization (units are +-q^k).
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Exact division a / b; throws std::domain_error if b is zero or does not divide.
LaurentPoly divexact(const LaurentPoly& a, const LaurentPoly& b);

/// Parse the "c*q^e + ..." grammar produced by LaurentPoly::str (whitespace
/// tolerant).  Throws std::invalid_argument on malformed input.
LaurentPoly parse_laurent(const std::string& text);

}  // namespace qmm
