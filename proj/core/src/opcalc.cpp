#include "qmm/opcalc.hpp"

#include <sstream>
#include <stdexcept>

#include "qmm/textio.hpp"

namespace qmm {

namespace {

// Exponent vector of the scalar q^{<c,m>} carried by b_ij (1-based i, j).
// Endpoints of the span between i and j contribute 1, strict interior 2,
// negated when j < i; zero for the diagonal.
XVec b_exponent(int rank, int i, int j) {
  XVec c(rank, 0);
  if (i == j) return c;
  const int lo = std::min(i, j), hi = std::max(i, j), sign = j > i ? 1 : -1;
  for (int t = lo; t <= hi; ++t) c[t - 1] = sign * ((t == lo || t == hi) ? 1 : 2);
  return c;
}

}  // namespace

SquareMatrix<OpPoly> build_B(int rank) {
  if (rank < 1) throw std::invalid_argument("build_B: rank must be >= 1");
  SquareMatrix<OpPoly> B(rank);
  for (int i = 1; i <= rank; ++i) {
    for (int j = 1; j <= rank; ++j) {
      OpPoly entry;
      if (i == j) {
        XVec shift(rank, 0);
        shift[i - 1] = 1;
        entry.add_term(OpMonomial{XVec(rank, 0), std::move(shift), {}}, LaurentPoly(1));
        entry.add_term(OpMonomial{XVec(rank, 0), XVec(rank, 0), Word{Gen{i, i}}},
                       LaurentPoly(-1));
      } else {
        entry.add_term(OpMonomial{b_exponent(rank, i, j), XVec(rank, 0), Word{Gen{i, j}}},
                       LaurentPoly(-1));
      }
      B.at(i - 1, j - 1) = std::move(entry);
    }
  }
  return B;
}

namespace {

// Split an operator polynomial into (qexp, shift) groups and require every
// group's word part to vanish modulo the ideal.
bool op_vanishes_mod_ideal(const OpPoly& p, MembershipSolver& solver, OpCheck& out) {
  bool ok = true;
  for (const auto& [key, nc] : split_by_op(p)) {
    std::vector<MembershipCertificate> certs;
    const bool group_ok = solver.zero_mod_ideal(nc, &certs);
    for (auto& c : certs) out.certificates.push_back(std::move(c));
    if (!group_ok && out.residual.empty()) {
      std::ostringstream os;
      os << "group qexp=[";
      for (std::size_t t = 0; t < key.first.size(); ++t)
        os << (t ? "," : "") << key.first[t];
      os << "] shift=[";
      for (std::size_t t = 0; t < key.second.size(); ++t)
        os << (t ? "," : "") << key.second[t];
      os << "]: " << to_text(nc);
      out.residual = os.str();
    }
    ok = ok && group_ok;
  }
  return ok;
}

bool mixed_vanishes_mod_ideal(const MixedPoly& p, MembershipSolver& solver, OpCheck& out) {
  bool ok = true;
  for (const auto& [xv, nc] : split_by_x(p)) {
    std::vector<MembershipCertificate> certs;
    const bool comp_ok = solver.zero_mod_ideal(nc, &certs);
    for (auto& c : certs) out.certificates.push_back(std::move(c));
    if (!comp_ok && out.residual.empty()) {
      std::ostringstream os;
      os << "x-component [";
      for (std::size_t t = 0; t < xv.size(); ++t) os << (t ? "," : "") << xv[t];
      os << "]: " << to_text(nc);
      out.residual = os.str();
    }
    ok = ok && comp_ok;
  }
  return ok;
}

}  // namespace

OpCheck x_commutation_check(XProductCache& cache, int i, int j, MembershipSolver& solver) {
  const int rank = cache.rank();
  if (!(1 <= i && i < j && j <= rank))
    throw std::invalid_argument("x_commutation_check: need 1 <= i < j <= rank");
  const std::vector<MixedPoly> X = make_X(rank);
  MixedPoly target = X[j - 1] * X[i - 1] - X[i - 1].scaled(LaurentPoly::q_power(1)) * X[j - 1];
  OpCheck out;
  out.ok = mixed_vanishes_mod_ideal(target, solver, out);
  return out;
}

bool x_scaling_check(int rank, int i, int j, int m) {
  if (!(1 <= i && i <= rank && 1 <= j && j <= rank && m >= 0))
    throw std::invalid_argument("x_scaling_check: bad parameters");
  const std::vector<MixedPoly> X = make_X(rank);
  MixedPoly xim = x_power(i, -m, rank);
  MixedPoly lhs = xim * X[j - 1];
  MixedPoly conjugated;
  for (int k = 1; k <= rank; ++k) {
    const int ck = (k > i) ? 1 : (k < i ? -1 : 0);
    MixedPoly term = MixedPoly::monomial(
        MixedMonomial{Word{Gen{j, k}}, XVec(rank, 0)}, LaurentPoly::q_power(ck * m));
    XVec v(rank, 0);
    v[k - 1] = 1;
    term *= MixedPoly::monomial(MixedMonomial{{}, std::move(v)});
    conjugated += term;
  }
  MixedPoly rhs = conjugated * xim;
  return lhs == rhs;
}

OpCheck b_right_quantum_check(int rank, MembershipSolver& solver) {
  if (rank < 2) throw std::invalid_argument("b_right_quantum_check: rank must be >= 2");
  SquareMatrix<OpPoly> B = build_B(rank);
  const LaurentPoly q = LaurentPoly::q_power(1), qi = LaurentPoly::q_power(-1);
  OpCheck out;
  out.ok = true;
  for (int i1 = 0; i1 < rank; ++i1)
    for (int i2 = i1 + 1; i2 < rank; ++i2)
      for (int j1 = 0; j1 < rank; ++j1)
        for (int j2 = j1 + 1; j2 < rank; ++j2) {
          const OpPoly &a = B.at(i1, j1), &b = B.at(i1, j2), &c = B.at(i2, j1),
                       &d = B.at(i2, j2);
          OpPoly r1 = c * a - (a * c).scaled(q);
          OpPoly r2 = d * b - (b * d).scaled(q);
          OpPoly r3 = a * d - d * a - (c * b).scaled(qi) + (b * c).scaled(q);
          out.ok = op_vanishes_mod_ideal(r1, solver, out) && out.ok;
          out.ok = op_vanishes_mod_ideal(r2, solver, out) && out.ok;
          out.ok = op_vanishes_mod_ideal(r3, solver, out) && out.ok;
        }
  return out;
}

DetBCheck detq_B_expansion_check(int rank, MembershipSolver& solver) {
  SquareMatrix<OpPoly> B = build_B(rank);
  const OpPoly det = qdet(B, op_one(rank));
  const SquareMatrix<NCPoly> A = generic_matrix(rank);
  DetBCheck out;
  out.ok = true;
  const XVec zero(static_cast<std::size_t>(rank), 0);

  // (a) det vs the subset sum of minor determinants times complement shifts
  OpPoly subset_sum;
  for (const auto& J : all_subsets(rank)) {
    XVec shift(static_cast<std::size_t>(rank), 1);
    for (int t : J) shift[t] = 0;
    NCPoly detJ = qdet(submatrix(A, J, J));
    if (J.size() % 2) detJ = -detJ;
    for (const auto& [w, c] : detJ.terms()) subset_sum.add_term(OpMonomial{zero, shift, w}, c);
  }
  const OpPoly diff = det - subset_sum;
  out.exact_in_free_algebra = diff.is_zero();
  for (const auto& [key, nc] : split_by_op(diff)) {
    if (key.first != zero) {
      // a nonzero q-exponent has no counterpart on the subset side and must
      // cancel exactly inside det itself
      out.ok = false;
      continue;
    }
    std::vector<MembershipCertificate> certs;
    const bool group_ok = solver.zero_mod_ideal(nc, &certs);
    for (auto& c : certs) out.certificates.push_back(std::move(c));
    out.ok = out.ok && group_ok;
  }

  // (b) collapse all shifts to 1: the determinant becomes ferm(A) mod ideal
  const NCPoly target = ferm(rank);
  for (auto& [qexp, nc] : specialize_shifts_to_one(det)) {
    if (qexp != zero) {
      out.ok = out.ok && nc.is_zero();
      continue;
    }
    std::vector<MembershipCertificate> certs;
    const bool group_ok = solver.equal_mod_ideal(nc, target, &certs);
    for (auto& c : certs) out.certificates.push_back(std::move(c));
    out.ok = out.ok && group_ok;
  }
  return out;
}

MixedPoly build_H(XProductCache& cache, const XVec& m) {
  const int rank = cache.rank();
  if (static_cast<int>(m.size()) != rank)
    throw std::invalid_argument("build_H: wrong exponent vector size");
  MixedPoly left = mixed_one(rank);
  for (int i = rank; i >= 1; --i)
    if (m[i - 1] != 0) left *= x_power(i, -m[i - 1], rank);
  return left * cache.product(m);
}

OpCheck annihilation_check(XProductCache& cache, const XVec& m, int i,
                           MembershipSolver& solver) {
  const int rank = cache.rank();
  if (!(1 <= i && i <= rank) || static_cast<int>(m.size()) != rank)
    throw std::invalid_argument("annihilation_check: bad parameters");
  for (int e : m)
    if (e < 0) throw std::invalid_argument("annihilation_check: m must be >= 0");
  XVec mi = m;
  mi[i - 1] += 1;
  const MixedPoly Hm = build_H(cache, m);
  const MixedPoly Hmi = build_H(cache, mi);
  MixedPoly target = x_power(i, 1, rank) * Hmi;
  {
    MixedPoly t = MixedPoly::monomial(MixedMonomial{Word{Gen{i, i}}, XVec(rank, 0)});
    target -= t * (x_power(i, 1, rank) * Hm);
  }
  for (int j = 1; j <= rank; ++j) {
    if (j == i) continue;
    const XVec c = b_exponent(rank, i, j);
    const long long E = xvec_dot(c, m);
    MixedPoly t = MixedPoly::monomial(MixedMonomial{Word{Gen{i, j}}, XVec(rank, 0)},
                                      LaurentPoly::q_power(static_cast<int>(E)));
    target -= t * (x_power(j, 1, rank) * Hm);
  }
  OpCheck out;
  out.ok = mixed_vanishes_mod_ideal(target, solver, out);
  return out;
}

}  // namespace qmm
