#include "qmm/linsolve.hpp"

#include <cassert>

namespace qmm {

void RationalEchelon::reduce(std::map<std::int64_t, Rational>& acc) const {
  while (!acc.empty()) {
    auto lead = acc.begin();
    auto it = rows_.find(lead->first);
    if (it == rows_.end()) return;
    const Rational c = lead->second;  // pivot row is normalized to lead 1
    acc.erase(lead);
    const SparseRow<Rational>& pivot = it->second;
    for (std::size_t k = 1; k < pivot.size(); ++k) {
      auto [entry, fresh] = acc.emplace(pivot[k].first, 0);
      entry->second -= c * pivot[k].second;
      if (entry->second == 0) acc.erase(entry);
    }
  }
}

void RationalEchelon::absorb(SparseRow<Rational> row) {
  std::map<std::int64_t, Rational> acc(row.begin(), row.end());
  reduce(acc);
  if (acc.empty()) return;
  SparseRow<Rational> out(acc.begin(), acc.end());
  const Rational lead = out.front().second;
  if (lead != 1)
    for (auto& [c, v] : out) v /= lead;
  rows_.emplace(out.front().first, std::move(out));
}

bool RationalEchelon::reduces_to_zero(const SparseRow<Rational>& row) const {
  std::map<std::int64_t, Rational> acc(row.begin(), row.end());
  reduce(acc);
  return acc.empty();
}

void LaurentEchelon::strip(SparseRow<LaurentPoly>& row) {
  if (row.empty()) return;
  LaurentPoly g = row.front().second;
  for (std::size_t i = 1; i < row.size() && !g.is_one(); ++i)
    g = laurent_gcd(g, row[i].second);
  if (!g.is_one())
    for (auto& [c, v] : row) v = divexact(v, g);
  // the gcd is defined up to units +-q^k; strip the common q-power and sign
  int s = row.front().second.min_exp();
  for (const auto& [c, v] : row) s = std::min(s, v.min_exp());
  if (s != 0)
    for (auto& [c, v] : row) v.shift(-s);
  if (row.front().second.terms().rbegin()->second < 0)
    for (auto& [c, v] : row) v = -v;
}

void LaurentEchelon::reduce(std::map<std::int64_t, RatFunc>& acc) const {
  while (!acc.empty()) {
    auto lead = acc.begin();
    auto it = rows_.find(lead->first);
    if (it == rows_.end()) return;
    const SparseRow<LaurentPoly>& pivot = it->second;
    const RatFunc c = lead->second * RatFunc(LaurentPoly(1), pivot.front().second);
    acc.erase(lead);
    for (std::size_t k = 1; k < pivot.size(); ++k) {
      auto [entry, fresh] = acc.emplace(pivot[k].first, RatFunc());
      entry->second -= c * RatFunc(pivot[k].second);
      if (entry->second.is_zero()) acc.erase(entry);
    }
  }
}

void LaurentEchelon::absorb(const SparseRow<LaurentPoly>& row) {
  std::map<std::int64_t, RatFunc> acc;
  for (const auto& [c, v] : row) acc.emplace(c, RatFunc(v));
  reduce(acc);
  if (acc.empty()) return;
  // clear denominators: multiply through by the lcm
  LaurentPoly lcm(1);
  for (const auto& [c, v] : acc) {
    const LaurentPoly& den = v.den();
    lcm = divexact(lcm * den, laurent_gcd(lcm, den));
  }
  SparseRow<LaurentPoly> out;
  out.reserve(acc.size());
  for (const auto& [c, v] : acc)
    out.emplace_back(c, v.num() * divexact(lcm, v.den()));
  strip(out);
  rows_.emplace(out.front().first, std::move(out));
}

bool LaurentEchelon::reduces_to_zero(const SparseRow<LaurentPoly>& row) const {
  std::map<std::int64_t, RatFunc> acc;
  for (const auto& [c, v] : row) acc.emplace(c, RatFunc(v));
  reduce(acc);
  return acc.empty();
}

}  // namespace qmm
