#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace qmm {

/// One generator a[row,col] of the free algebra on an r x r symbol matrix.
/// Indices are 1-based to match the usual matrix-entry notation.
struct Gen {
  std::int32_t row{};
  std::int32_t col{};
  friend auto operator<=>(const Gen&, const Gen&) = default;
};

/// Word in the generators; the empty word is the multiplicative identity.
using Word = std::vector<Gen>;

/// Degree-then-lexicographic word order.  The rewriting system for the
/// fully-quantum relations strictly decreases this order, which is what makes
/// normal forms terminate.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Integer exponent vector, indexed 0..r-1 for variables x_1..x_r (and reused
/// for the q- and shift-exponent vectors of the operator algebra).
using XVec = std::vector<int>;

inline XVec xvec_add(const XVec& a, const XVec& b) {
  XVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline long long xvec_dot(const XVec& a, const XVec& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
  return s;
}

/// Exponent picked up when x^a crosses left past x^b on the quantum plane
/// (x_j x_i = q x_i x_j for i < j): sum over i > j of a_i * b_j.
inline long long crossing_exponent(const XVec& a, const XVec& b) {
  long long s = 0, prefix = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += static_cast<long long>(a[i]) * prefix;
    prefix += b[i];
  }
  return s;
}

inline Word word_concat(const Word& a, const Word& b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

/// Monomial of the mixed algebra: an a-word times a sorted quantum-plane
/// monomial x_1^{v_1}...x_r^{v_r} (exponents may be negative).  All x-content
/// is kept normal-ordered to the right of the word.
struct MixedMonomial {
  Word word;
  XVec xvec;
  friend bool operator==(const MixedMonomial&, const MixedMonomial&) = default;
};

struct MixedLess {
  bool operator()(const MixedMonomial& a, const MixedMonomial& b) const {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    if (a.word != b.word) return a.word < b.word;
    return a.xvec < b.xvec;
  }
};

/// Monomial of the operator algebra acting on functions of m_1..m_r:
/// q^{qexp . m} * (shift of m by `shift`) * a-word.  The commutation
/// M_i Q_i = q Q_i M_i is folded into products; see mono_mul below.
struct OpMonomial {
  XVec qexp;   // exponent vector of the diagonal q^{<.,m>} factor
  XVec shift;  // how much the monomial shifts each m_i
  Word word;
  friend bool operator==(const OpMonomial&, const OpMonomial&) = default;
};

struct OpLess {
  bool operator()(const OpMonomial& a, const OpMonomial& b) const {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    if (a.word != b.word) return a.word < b.word;
    if (a.qexp != b.qexp) return a.qexp < b.qexp;
    return a.shift < b.shift;
  }
};

/// Monomial products.  Each returns the combined monomial plus the power of q
/// produced by normal-ordering the factors.
inline std::pair<Word, long long> mono_mul(const Word& a, const Word& b) {
  return {word_concat(a, b), 0};
}

inline std::pair<MixedMonomial, long long> mono_mul(const MixedMonomial& a,
                                                    const MixedMonomial& b) {
  // Sorting x^{a.xvec} past x^{b.xvec}: every (x_i, x_j) pair with i > j swaps.
  return {MixedMonomial{word_concat(a.word, b.word), xvec_add(a.xvec, b.xvec)},
          crossing_exponent(a.xvec, b.xvec)};
}

inline std::pair<OpMonomial, long long> mono_mul(const OpMonomial& a, const OpMonomial& b) {
  // Pulling b's q^{<qexp,m>} factor left past a's shift operators.
  return {OpMonomial{xvec_add(a.qexp, b.qexp), xvec_add(a.shift, b.shift),
                     word_concat(a.word, b.word)},
          xvec_dot(a.shift, b.qexp)};
}

}  // namespace qmm
