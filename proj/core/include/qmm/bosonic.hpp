#pragma once

#include <map>
#include <string>
#include <vector>

#include "qmm/qdet.hpp"
#include "qmm/relations.hpp"

namespace qmm {

/// The row forms X_i = sum_j a[i,j] x_j of the generic matrix, as mixed
/// polynomials of the given rank (index i is 1-based).
std::vector<MixedPoly> make_X(int rank);

/// Shared expansion cache for the ordered products X_1^{m_1} ... X_r^{m_r}
/// (factors left to right, i ascending).  Products for nested exponent
/// vectors share work: P(m) = P(m - e_last) * X_last.
class XProductCache {
 public:
  explicit XProductCache(int rank);

  int rank() const { return rank_; }
  const MixedPoly& product(const XVec& m);

 private:
  int rank_;
  std::vector<MixedPoly> X_;
  std::map<XVec, MixedPoly> memo_;
};

/// G(m): coefficient of x^m in X_1^{m_1} ... X_r^{m_r}; a homogeneous NCPoly
/// of a-degree |m|.
NCPoly g_coefficient(XProductCache& cache, const XVec& m);

/// Bosonic side truncated at total degree N: sum of G(m) over all m >= 0 with
/// |m| <= N (the m = 0 term is 1).
NCPoly bos_truncated(XProductCache& cache, int N);

/// Degree-n piece of the bosonic side: sum of G(m) over |m| = n.  Equals the
/// symmetric-power trace of the generic matrix.
NCPoly tr_sym(XProductCache& cache, int n);

/// Degree-n piece of the fermionic side without sign: sum over n-element
/// subsets J of qdet(A_J).  ferm(r) = sum_n (-1)^n tr_ext(r, n).
NCPoly tr_ext(int rank, int n);

/// Evidence for one graded component of a product-equals-one check.
struct ComponentVerdict {
  int degree = 0;
  std::string order;  // "ferm*bos" or "bos*ferm"
  bool ok = false;
  bool rewrite_mode = false;
  std::vector<MembershipCertificate> certificates;  // membership route
  std::string residual;                             // nonzero normal form, on failure
};

struct MasterResult {
  bool ok = false;
  std::vector<ComponentVerdict> components;
};

/// Certifies ferm * bos = 1 and bos * ferm = 1 up to degree N modulo the
/// solver's relation ideal.  The degree-0 component must be exactly 1; every
/// higher component of the product minus one must lie in the ideal.
MasterResult master_verify(XProductCache& cache, int N, MembershipSolver& solver);

/// Same statement decided by rewriting to normal form (full-quantum flavor
/// only): each graded component of ferm * bos - 1 and bos * ferm - 1 must
/// rewrite to zero.
MasterResult master_verify_rewrite(XProductCache& cache, int N, const RelationSet& rs);

/// Classical limit: at q = 1 with commuting variables, the bosonic sum over
/// |m| <= N must match the geometric expansion of 1/det(I - A) through total
/// degree N in the matrix entries.  Exact integer comparison, no relations.
bool classical_check(int rank, int N);

/// Inclusion-exclusion refinement: sum over subsets J of
/// (-1)^{|J|} ferm(A_J) * (sum of G(m) with support in J, |m| <= N) has every
/// graded component 1..N in the ideal and degree-0 component exactly zero.
struct InclusionExclusionResult {
  bool ok = false;
  std::vector<MembershipCertificate> certificates;
};
InclusionExclusionResult inclusion_exclusion_check(XProductCache& cache, int N,
                                                   MembershipSolver& solver);

}  // namespace qmm
