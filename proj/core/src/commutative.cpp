#include "qmm/commutative.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qmm {

CommPoly CommPoly::constant(int nvars, int maxdeg, const Int& c) {
  CommPoly p(nvars, maxdeg);
  if (c != 0) p.terms_[std::vector<int>(nvars, 0)] = c;
  return p;
}

CommPoly CommPoly::variable(int nvars, int maxdeg, int idx) {
  if (idx < 0 || idx >= nvars) throw std::invalid_argument("CommPoly::variable: bad index");
  CommPoly p(nvars, maxdeg);
  if (maxdeg >= 1) {
    std::vector<int> e(nvars, 0);
    e[idx] = 1;
    p.terms_[std::move(e)] = 1;
  }
  return p;
}

void CommPoly::add_term(const std::vector<int>& expo, const Int& c) {
  if (c == 0) return;
  if (std::accumulate(expo.begin(), expo.end(), 0) > maxdeg_) return;
  auto [it, fresh] = terms_.emplace(expo, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
  CommPoly out(a.nvars_, a.maxdeg_);
  std::vector<int> expo(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    const int da = std::accumulate(ea.begin(), ea.end(), 0);
    for (const auto& [eb, cb] : b.terms_) {
      const int db = std::accumulate(eb.begin(), eb.end(), 0);
      if (da + db > a.maxdeg_) continue;
      for (std::size_t i = 0; i < expo.size(); ++i) expo[i] = ea[i] + eb[i];
      out.add_term(expo, ca * cb);
    }
  }
  return out;
}

CommPoly specialize_q1_commutative(const NCPoly& p, int rank, int maxdeg) {
  CommPoly out(rank * rank, maxdeg);
  std::vector<int> expo(static_cast<std::size_t>(rank) * rank);
  for (const auto& [w, c] : p.terms()) {
    std::fill(expo.begin(), expo.end(), 0);
    for (const Gen& g : w) {
      if (g.row < 1 || g.row > rank || g.col < 1 || g.col > rank)
        throw std::invalid_argument("specialize_q1_commutative: generator outside rank");
      expo[static_cast<std::size_t>(g.row - 1) * rank + (g.col - 1)] += 1;
    }
    out.add_term(expo, c.eval_at_one());
  }
  return out;
}

}  // namespace qmm
