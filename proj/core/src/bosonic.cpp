#include "qmm/bosonic.hpp"

#include <stdexcept>

#include "qmm/commutative.hpp"
#include "qmm/textio.hpp"

namespace qmm {

std::vector<MixedPoly> make_X(int rank) {
  if (rank < 1) throw std::invalid_argument("make_X: rank must be >= 1");
  std::vector<MixedPoly> out;
  out.reserve(rank);
  for (int i = 1; i <= rank; ++i) {
    MixedPoly Xi;
    for (int j = 1; j <= rank; ++j) {
      XVec v(rank, 0);
      v[j - 1] = 1;
      Xi.add_term(MixedMonomial{Word{Gen{i, j}}, std::move(v)}, LaurentPoly(1));
    }
    out.push_back(std::move(Xi));
  }
  return out;
}

XProductCache::XProductCache(int rank) : rank_(rank), X_(make_X(rank)) {
  memo_.emplace(XVec(rank, 0), mixed_one(rank));
}

const MixedPoly& XProductCache::product(const XVec& m) {
  if (static_cast<int>(m.size()) != rank_)
    throw std::invalid_argument("XProductCache::product: wrong exponent vector size");
  for (int e : m)
    if (e < 0) throw std::invalid_argument("XProductCache::product: exponents must be >= 0");
  auto it = memo_.find(m);
  if (it != memo_.end()) return it->second;
  // last factor is X_i for the largest i with m_i > 0
  int last = rank_ - 1;
  while (m[last] == 0) --last;
  XVec prev = m;
  prev[last] -= 1;
  MixedPoly prod = product(prev) * X_[last];
  return memo_.emplace(m, std::move(prod)).first->second;
}

NCPoly g_coefficient(XProductCache& cache, const XVec& m) {
  return coefficient_of_x(cache.product(m), m);
}

namespace {

// All m >= 0 with |m| = total, lexicographically by position.
void compositions(int rank, int total, XVec& cur, int pos, std::vector<XVec>& out) {
  if (pos == rank - 1) {
    cur[pos] = total;
    out.push_back(cur);
    return;
  }
  for (int v = 0; v <= total; ++v) {
    cur[pos] = v;
    compositions(rank, total - v, cur, pos + 1, out);
  }
}

std::vector<XVec> all_compositions(int rank, int total) {
  std::vector<XVec> out;
  XVec cur(rank, 0);
  compositions(rank, total, cur, 0, out);
  return out;
}

}  // namespace

NCPoly bos_truncated(XProductCache& cache, int N) {
  NCPoly out;
  for (int n = 0; n <= N; ++n) out += tr_sym(cache, n);
  return out;
}

NCPoly tr_sym(XProductCache& cache, int n) {
  NCPoly out;
  for (const XVec& m : all_compositions(cache.rank(), n)) out += g_coefficient(cache, m);
  return out;
}

NCPoly tr_ext(int rank, int n) {
  if (n < 0 || n > rank) return NCPoly();
  SquareMatrix<NCPoly> A = generic_matrix(rank);
  NCPoly out;
  for (const auto& J : all_subsets(rank))
    if (static_cast<int>(J.size()) == n) out += qdet(submatrix(A, J, J));
  return out;
}

namespace {

ComponentVerdict check_component_membership(const NCPoly& product_minus_one, int d,
                                            const char* order, MembershipSolver& solver) {
  ComponentVerdict cv;
  cv.degree = d;
  cv.order = order;
  NCPoly comp = graded_component(product_minus_one, d);
  if (d == 0) {
    cv.ok = comp.is_zero();
    if (!cv.ok) cv.residual = to_text(comp);
    return cv;
  }
  if (comp.is_zero()) {
    cv.ok = true;
    return cv;
  }
  MembershipCertificate cert = solver.member(comp);
  cv.ok = cert.verdict;
  cv.certificates.push_back(std::move(cert));
  if (!cv.ok) cv.residual = to_text(comp);
  return cv;
}

ComponentVerdict check_component_rewrite(const NCPoly& product_minus_one, int d,
                                         const char* order, const RelationSet& rs) {
  ComponentVerdict cv;
  cv.degree = d;
  cv.order = order;
  cv.rewrite_mode = true;
  NCPoly comp = graded_component(product_minus_one, d);
  if (d == 0) {
    cv.ok = comp.is_zero();
  } else {
    NCPoly nf = rewrite_normal_form(comp, rs);
    cv.ok = nf.is_zero();
    if (!cv.ok) cv.residual = to_text(nf);
  }
  return cv;
}

}  // namespace

MasterResult master_verify(XProductCache& cache, int N, MembershipSolver& solver) {
  if (solver.relations().rank != cache.rank())
    throw std::invalid_argument("master_verify: solver and cache rank mismatch");
  MasterResult res;
  res.ok = true;
  const NCPoly f = ferm(cache.rank());
  const NCPoly b = bos_truncated(cache, N);
  const NCPoly one = nc_one();
  const NCPoly fb = f * b - one;
  const NCPoly bf = b * f - one;
  for (int d = 0; d <= N; ++d) {
    res.components.push_back(check_component_membership(fb, d, "ferm*bos", solver));
    res.ok = res.ok && res.components.back().ok;
    res.components.push_back(check_component_membership(bf, d, "bos*ferm", solver));
    res.ok = res.ok && res.components.back().ok;
  }
  return res;
}

MasterResult master_verify_rewrite(XProductCache& cache, int N, const RelationSet& rs) {
  MasterResult res;
  res.ok = true;
  const NCPoly f = ferm(cache.rank());
  const NCPoly b = bos_truncated(cache, N);
  const NCPoly one = nc_one();
  const NCPoly fb = f * b - one;
  const NCPoly bf = b * f - one;
  for (int d = 0; d <= N; ++d) {
    res.components.push_back(check_component_rewrite(fb, d, "ferm*bos", rs));
    res.ok = res.ok && res.components.back().ok;
    res.components.push_back(check_component_rewrite(bf, d, "bos*ferm", rs));
    res.ok = res.ok && res.components.back().ok;
  }
  return res;
}

bool classical_check(int rank, int N) {
  if (rank < 1 || N < 0) throw std::invalid_argument("classical_check: bad parameters");
  // variables: a[i,j] -> (i-1)*rank + (j-1), x_i -> rank^2 + (i-1)
  const int nv = rank * rank + rank;
  const int cap = 2 * N;  // a-degree d term carries x-degree d as well
  auto avar = [&](int i, int j) {
    return CommPoly::variable(nv, cap, (i - 1) * rank + (j - 1));
  };
  auto xvar = [&](int i) { return CommPoly::variable(nv, cap, rank * rank + (i - 1)); };

  // bosonic sum: for each |m| <= N, the coefficient of x^m in prod X_i^{m_i}
  std::vector<CommPoly> X;
  for (int i = 1; i <= rank; ++i) {
    CommPoly Xi(nv, cap);
    for (int j = 1; j <= rank; ++j) Xi += avar(i, j) * xvar(j);
    X.push_back(Xi);
  }
  CommPoly lhs = CommPoly::constant(nv, cap, 0);
  for (int n = 0; n <= N; ++n) {
    for (const XVec& m : all_compositions(rank, n)) {
      CommPoly prod = CommPoly::constant(nv, cap, 1);
      for (int i = 0; i < rank; ++i)
        for (int k = 0; k < m[i]; ++k) prod *= X[i];
      // keep terms whose x-part is exactly x^m, stripped of the x variables
      for (const auto& [expo, c] : prod.terms()) {
        bool match = true;
        for (int i = 0; i < rank && match; ++i) match = expo[rank * rank + i] == m[i];
        if (!match) continue;
        std::vector<int> stripped = expo;
        for (int i = 0; i < rank; ++i) stripped[rank * rank + i] = 0;
        lhs.add_term(stripped, c);
      }
    }
  }

  // geometric side: sum_{k<=N} u^k with u = 1 - det(I - A), truncated to
  // a-degree N (u has no constant term, so higher powers cannot contribute)
  CommPoly detIA = CommPoly::constant(nv, cap, 0);
  std::vector<int> perm(rank);
  for (int i = 0; i < rank; ++i) perm[i] = i;
  do {
    CommPoly prod = CommPoly::constant(nv, cap, (inversions(perm) % 2) ? -1 : 1);
    for (int c = 0; c < rank; ++c) {
      CommPoly entry = CommPoly::constant(nv, cap, perm[c] == c ? 1 : 0);
      entry -= avar(perm[c] + 1, c + 1);
      prod *= entry;
    }
    detIA += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CommPoly u = CommPoly::constant(nv, cap, 1) - detIA;
  CommPoly rhs = CommPoly::constant(nv, cap, 0);
  CommPoly upow = CommPoly::constant(nv, cap, 1);
  for (int k = 0; k <= N; ++k) {
    rhs += upow;
    if (k < N) upow *= u;
  }

  // compare through a-degree N only (the truncation horizon)
  CommPoly diff = lhs - rhs;
  for (const auto& [expo, c] : diff.terms()) {
    int adeg = 0;
    for (int i = 0; i < rank * rank; ++i) adeg += expo[i];
    if (adeg <= N) return false;
  }
  return true;
}

InclusionExclusionResult inclusion_exclusion_check(XProductCache& cache, int N,
                                                   MembershipSolver& solver) {
  const int rank = cache.rank();
  if (solver.relations().rank != rank)
    throw std::invalid_argument("inclusion_exclusion_check: rank mismatch");
  SquareMatrix<NCPoly> A = generic_matrix(rank);
  NCPoly total;
  for (const auto& J : all_subsets(rank)) {
    // ferm of the J x J principal submatrix
    NCPoly fermJ;
    for (const auto& K : all_subsets(static_cast<int>(J.size()))) {
      std::vector<int> idx;
      for (int t : K) idx.push_back(J[t]);
      NCPoly det = qdet(submatrix(A, idx, idx));
      if (K.size() % 2) det = -det;
      fermJ += det;
    }
    // bosonic sum restricted to support inside J
    NCPoly SJ;
    for (int n = 0; n <= N; ++n)
      for (const XVec& mJ : all_compositions(std::max<int>(1, static_cast<int>(J.size())), n)) {
        if (J.empty()) {
          if (n == 0) SJ += nc_one();
          continue;
        }
        XVec m(rank, 0);
        for (std::size_t t = 0; t < J.size(); ++t) m[J[t]] = mJ[t];
        SJ += g_coefficient(cache, m);
      }
    NCPoly term = fermJ * SJ;
    if (J.size() % 2) term = -term;
    total += term;
  }
  InclusionExclusionResult out;
  out.ok = true;
  // components above degree N are truncation residue (each subset's bosonic
  // sum stops at |m| = N), so only degrees 0..N carry the identity
  for (int d = 0; d <= N; ++d) {
    NCPoly comp = graded_component(total, d);
    if (comp.is_zero()) continue;
    MembershipCertificate cert = solver.member(comp);
    out.ok = out.ok && cert.verdict;
    out.certificates.push_back(std::move(cert));
  }
  return out;
}

}  // namespace qmm
