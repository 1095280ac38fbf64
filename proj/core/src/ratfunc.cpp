#include "qmm/ratfunc.hpp"

#include <stdexcept>
#include <utility>

namespace qmm {

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  // Push the denominator's q-shift into the numerator so den has min_exp 0.
  int s = den_.min_exp();
  if (s != 0) {
    den_.shift(-s);
    num_.shift(-s);
  }
  LaurentPoly g = laurent_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = divexact(num_, g);
    den_ = divexact(den_, g);
  }
  // laurent_gcd strips any shared q-power from the pair, re-anchor den at 0.
  s = den_.min_exp();
  if (s != 0) {
    den_.shift(-s);
    num_.shift(-s);
  }
  if (den_.terms().rbegin()->second < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc RatFunc::inv() const {
  if (num_.is_zero()) throw std::domain_error("RatFunc::inv: zero");
  return RatFunc(den_, num_);
}

Rational RatFunc::eval(const Rational& q0) const {
  Rational d = den_.eval(q0);
  if (d == 0) throw std::domain_error("RatFunc::eval: q0 is a pole");
  return num_.eval(q0) / d;
}

std::string RatFunc::str() const { return num_.str() + " / " + den_.str(); }

}  // namespace qmm
