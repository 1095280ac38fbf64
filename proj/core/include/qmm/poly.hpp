#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "qmm/laurent.hpp"
#include "qmm/words.hpp"

namespace qmm {

/// Polynomial with LaurentPoly coefficients over a monomial type M.  The
/// monomial product (mono_mul overload) supplies both the combined monomial
/// and the q-power its normal ordering produces, so one template covers the
/// free algebra, the mixed algebra and the operator algebra.
template <class M, class Less>
class Poly {
 public:
  using Map = std::map<M, LaurentPoly, Less>;

  Poly() = default;

  static Poly monomial(M m, LaurentPoly c = LaurentPoly(1)) {
    Poly p;
    if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Map& terms() const { return terms_; }

  void add_term(const M& m, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const {
    Poly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        auto [m, e] = mono_mul(ma, mb);
        LaurentPoly c = ca * cb;
        c.shift(static_cast<int>(e));
        out.add_term(m, c);
      }
    return out;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// Multiply every coefficient by s.
  void scale(const LaurentPoly& s) {
    if (s.is_zero()) {
      terms_.clear();
      return;
    }
    if (s.is_one()) return;
    Map next;
    for (const auto& [m, c] : terms_) next.emplace(m, c * s);
    terms_ = std::move(next);
  }
  Poly scaled(const LaurentPoly& s) const {
    Poly out = *this;
    out.scale(s);
    return out;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  Map terms_;
};

using NCPoly = Poly<Word, WordLess>;
using MixedPoly = Poly<MixedMonomial, MixedLess>;
using OpPoly = Poly<OpMonomial, OpLess>;

// ---- identities and embeddings ------------------------------------------

inline NCPoly nc_constant(const LaurentPoly& c) { return NCPoly::monomial(Word{}, c); }
inline NCPoly nc_one() { return nc_constant(LaurentPoly(1)); }
inline NCPoly nc_gen(int row, int col, LaurentPoly c = LaurentPoly(1)) {
  return NCPoly::monomial(Word{Gen{row, col}}, std::move(c));
}

inline MixedPoly mixed_one(int rank) {
  return MixedPoly::monomial(MixedMonomial{{}, XVec(rank, 0)});
}
/// x_i^e as a mixed monomial (i is 1-based).
inline MixedPoly x_power(int i, int e, int rank) {
  XVec v(rank, 0);
  v[i - 1] = e;
  return MixedPoly::monomial(MixedMonomial{{}, std::move(v)});
}
inline MixedPoly mixed_embed(const NCPoly& p, int rank) {
  MixedPoly out;
  for (const auto& [w, c] : p.terms()) out.add_term(MixedMonomial{w, XVec(rank, 0)}, c);
  return out;
}

inline OpPoly op_one(int rank) {
  return OpPoly::monomial(OpMonomial{XVec(rank, 0), XVec(rank, 0), {}});
}
inline OpPoly op_embed(const NCPoly& p, int rank) {
  OpPoly out;
  for (const auto& [w, c] : p.terms())
    out.add_term(OpMonomial{XVec(rank, 0), XVec(rank, 0), w}, c);
  return out;
}

// ---- grading by a-degree --------------------------------------------------

inline int a_degree(const Word& m) { return static_cast<int>(m.size()); }
inline int a_degree(const MixedMonomial& m) { return static_cast<int>(m.word.size()); }
inline int a_degree(const OpMonomial& m) { return static_cast<int>(m.word.size()); }

template <class M, class L>
Poly<M, L> graded_component(const Poly<M, L>& p, int d) {
  Poly<M, L> out;
  for (const auto& [m, c] : p.terms())
    if (a_degree(m) == d) out.add_term(m, c);
  return out;
}

/// True if every term has the same a-degree (the zero polynomial counts as
/// homogeneous of degree 0); on success *degree_out receives that degree.
template <class M, class L>
bool is_homogeneous(const Poly<M, L>& p, int* degree_out = nullptr) {
  int d = p.is_zero() ? 0 : a_degree(p.terms().begin()->first);
  for (const auto& [m, c] : p.terms())
    if (a_degree(m) != d) return false;
  if (degree_out) *degree_out = d;
  return true;
}

template <class M, class L>
int max_a_degree(const Poly<M, L>& p) {
  int d = 0;
  for (const auto& [m, c] : p.terms()) d = std::max(d, a_degree(m));
  return d;
}

// ---- splitting mixed / operator polynomials -------------------------------

/// Coefficient (an NCPoly) of the x-monomial with exponent vector v.
inline NCPoly coefficient_of_x(const MixedPoly& p, const XVec& v) {
  NCPoly out;
  for (const auto& [m, c] : p.terms())
    if (m.xvec == v) out.add_term(m.word, c);
  return out;
}

inline std::map<XVec, NCPoly> split_by_x(const MixedPoly& p) {
  std::map<XVec, NCPoly> out;
  for (const auto& [m, c] : p.terms()) out[m.xvec].add_term(m.word, c);
  return out;
}

/// Group an operator polynomial by its (qexp, shift) pair; each group's word
/// part is returned as an NCPoly.
inline std::map<std::pair<XVec, XVec>, NCPoly> split_by_op(const OpPoly& p) {
  std::map<std::pair<XVec, XVec>, NCPoly> out;
  for (const auto& [m, c] : p.terms()) out[{m.qexp, m.shift}].add_term(m.word, c);
  return out;
}

/// Specialize every shift operator M_i to the scalar 1 (qexp is kept symbolic).
inline std::map<XVec, NCPoly> specialize_shifts_to_one(const OpPoly& p) {
  std::map<XVec, NCPoly> out;
  for (const auto& [m, c] : p.terms()) out[m.qexp].add_term(m.word, c);
  return out;
}

}  // namespace qmm
