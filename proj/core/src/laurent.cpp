#include "qmm/laurent.hpp"

#include <cassert>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qmm {

LaurentPoly LaurentPoly::term(const Int& c, int e) {
  LaurentPoly p;
  if (c != 0) p.terms_[e] = c;
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

int LaurentPoly::min_exp() const {
  assert(!terms_.empty());
  return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
  assert(!terms_.empty());
  return terms_.rbegin()->first;
}

const Int& LaurentPoly::coeff(int e) const {
  static const Int kZero = 0;
  auto it = terms_.find(e);
  return it == terms_.end() ? kZero : it->second;
}

void LaurentPoly::add_term(int e, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

void LaurentPoly::shift(int e) {
  if (e == 0 || terms_.empty()) return;
  TermMap shifted;
  for (const auto& [e0, c] : terms_) shifted.emplace(e0 + e, c);
  terms_ = std::move(shifted);
}

LaurentPoly LaurentPoly::shifted(int e) const {
  LaurentPoly out = *this;
  out.shift(e);
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly out(1), base = *this;
  while (n) {
    if (n & 1u) out *= base;
    base = (n >>= 1) ? base * base : base;
  }
  return out;
}

Rational LaurentPoly::eval(const Rational& q0) const {
  if (q0 == 0) throw std::invalid_argument("LaurentPoly::eval: q0 must be nonzero");
  if (terms_.empty()) return Rational(0);
  // Horner over ascending exponents, then one division by q0^{-min_exp} if needed.
  Rational acc(0);
  int prev = terms_.rbegin()->first;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (int k = it->first; k < prev; ++k) acc *= q0;
    acc += Rational(it->second);
    prev = it->first;
  }
  int e0 = terms_.begin()->first;
  if (e0 > 0) {
    Rational scale(1);
    for (int k = 0; k < e0; ++k) scale *= q0;
    acc *= scale;
  } else if (e0 < 0) {
    Rational scale(1);
    for (int k = 0; k < -e0; ++k) scale *= q0;
    acc /= scale;
  }
  return acc;
}

Int LaurentPoly::eval_at_one() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

Int LaurentPoly::content() const {
  Int g = 0;
  for (const auto& [e, c] : terms_) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

void LaurentPoly::div_content(const Int& d) {
  if (d == 0) throw std::domain_error("LaurentPoly::div_content: zero divisor");
  for (auto& [e, c] : terms_) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
      throw std::domain_error("LaurentPoly::div_content: inexact division");
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  }
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    os << it->second.get_str() << "*q^" << it->first;
    first = false;
  }
  return os.str();
}

namespace {

// Dense ordinary-polynomial helpers used by gcd/divexact.  Coefficient vectors
// are indexed by exponent; invariant: back() != 0 unless empty (zero poly).
using Dense = std::vector<Int>;

void dense_trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense to_dense_shifted(const LaurentPoly& p, int& shift_out) {
  // p = q^shift * (ordinary poly with nonzero constant term)
  shift_out = p.is_zero() ? 0 : p.min_exp();
  Dense d;
  if (p.is_zero()) return d;
  d.assign(p.max_exp() - p.min_exp() + 1, Int(0));
  for (const auto& [e, c] : p.terms()) d[e - p.min_exp()] = c;
  return d;
}

LaurentPoly from_dense(const Dense& d, int shift) {
  LaurentPoly out;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) out += LaurentPoly::term(d[i], static_cast<int>(i) + shift);
  return out;
}

Int dense_content(const Dense& p) {
  Int g = 0;
  for (const auto& c : p) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

void dense_make_primitive(Dense& p) {
  Int g = dense_content(p);
  if (g == 0) return;
  if (p.back() < 0) g = -g;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b (b nonzero, deg a >= deg b on entry not required).
Dense dense_prem(Dense a, const Dense& b) {
  assert(!b.empty());
  const Int& lb = b.back();
  while (a.size() >= b.size()) {
    Int la = a.back();
    std::size_t off = a.size() - b.size();
    // a := lb*a - la*q^off*b  (kills the leading term)
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= la * b[i];
    dense_trim(a);
    if (a.empty()) break;
  }
  return a;
}

Dense dense_gcd_primitive(Dense a, Dense b) {
  dense_make_primitive(a);
  dense_make_primitive(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.size() < b.size()) a.swap(b);
  while (!b.empty()) {
    Dense r = dense_prem(a, b);
    dense_make_primitive(r);
    a.swap(b);
    b.swap(r);
  }
  return a;
}

}  // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  auto normalize = [](const LaurentPoly& p) {
    if (p.is_zero()) return p;
    LaurentPoly out = p.shifted(-p.min_exp());
    if (out.terms_.rbegin()->second < 0) out = -out;
    return out;
  };
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  int sa, sb;
  Dense da = to_dense_shifted(a, sa), db = to_dense_shifted(b, sb);
  Int c = gcd(dense_content(da), dense_content(db));
  Dense g = dense_gcd_primitive(std::move(da), std::move(db));
  if (g.back() < 0)
    for (auto& x : g) x = -x;
  LaurentPoly out = from_dense(g, 0);
  if (c != 1) {
    LaurentPoly scaled;
    for (const auto& [e, cf] : out.terms()) scaled += LaurentPoly::term(cf * c, e);
    out = scaled;
  }
  return out;
}

LaurentPoly divexact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("divexact: division by zero");
  if (a.is_zero()) return LaurentPoly();
  int sa, sb;
  Dense da = to_dense_shifted(a, sa), db = to_dense_shifted(b, sb);
  if (da.size() < db.size()) throw std::domain_error("divexact: not divisible");
  Dense quo(da.size() - db.size() + 1, Int(0));
  for (std::size_t k = quo.size(); k-- > 0;) {
    dense_trim(da);
    if (da.size() != db.size() + k) {
      // leading term already cancelled; quotient coefficient is zero
      if (da.size() > db.size() + k) throw std::domain_error("divexact: not divisible");
      continue;
    }
    Int& la = da.back();
    if (!mpz_divisible_p(la.get_mpz_t(), db.back().get_mpz_t()))
      throw std::domain_error("divexact: not divisible");
    Int qk;
    mpz_divexact(qk.get_mpz_t(), la.get_mpz_t(), db.back().get_mpz_t());
    quo[k] = qk;
    for (std::size_t i = 0; i < db.size(); ++i) da[k + i] -= qk * db[i];
  }
  dense_trim(da);
  if (!da.empty()) throw std::domain_error("divexact: not divisible");
  return from_dense(quo, sa - sb);
}

LaurentPoly parse_laurent(const std::string& text) {
  LaurentPoly out;
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  if (i >= text.size()) throw std::invalid_argument("parse_laurent: empty input");
  if (text.compare(i, 1, "0") == 0) {
    std::size_t j = i + 1;
    while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j == text.size()) return out;
  }
  while (true) {
    skip_ws();
    std::size_t start = i;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      throw std::invalid_argument("parse_laurent: expected coefficient");
    std::string ctext = text.substr(start, i - start);
    if (ctext[0] == '+') ctext.erase(0, 1);  // mpz rejects a leading '+'
    Int c(ctext);
    skip_ws();
    if (i + 3 > text.size() || text.compare(i, 3, "*q^") != 0)
      throw std::invalid_argument("parse_laurent: expected '*q^'");
    i += 3;
    start = i;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw std::invalid_argument("parse_laurent: expected exponent");
    int e = std::atoi(text.substr(start, i - start).c_str());
    out += LaurentPoly::term(c, e);
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '+') throw std::invalid_argument("parse_laurent: expected '+' between terms");
    ++i;
  }
  return out;
}

}  // namespace qmm
