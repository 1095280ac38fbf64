#include "qmm/relations.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>

namespace qmm {

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::RightQuantum: return "right-quantum";
    case Flavor::FullQuantum: return "full-quantum";
    case Flavor::LeftQuantum: return "left-quantum";
  }
  return "?";
}

std::string to_string(ArithMode m) {
  return m == ArithMode::Exact ? "exact" : "probabilistic";
}

Flavor flavor_from_string(const std::string& s) {
  if (s == "right-quantum") return Flavor::RightQuantum;
  if (s == "full-quantum") return Flavor::FullQuantum;
  if (s == "left-quantum") return Flavor::LeftQuantum;
  throw std::invalid_argument("unknown flavor: " + s);
}

ArithMode arith_from_string(const std::string& s) {
  if (s == "exact") return ArithMode::Exact;
  if (s == "probabilistic") return ArithMode::Probabilistic;
  throw std::invalid_argument("unknown arithmetic mode: " + s);
}

namespace {

NCPoly word2(Gen g1, Gen g2, LaurentPoly c = LaurentPoly(1)) {
  return NCPoly::monomial(Word{g1, g2}, std::move(c));
}

// ca - q ac for the (possibly rectangular) generator pair: the lower entry
// moved left past the upper one within one column.
NCPoly column_relation(int i_top, int i_bot, int j) {
  return word2(Gen{i_bot, j}, Gen{i_top, j}) -
         word2(Gen{i_top, j}, Gen{i_bot, j}, LaurentPoly::q_power(1));
}

// ba - q ab within one row.
NCPoly row_relation(int i, int j_left, int j_right) {
  return word2(Gen{i, j_right}, Gen{i, j_left}) -
         word2(Gen{i, j_left}, Gen{i, j_right}, LaurentPoly::q_power(1));
}

}  // namespace

RelationSet right_quantum_relations(int rank) {
  if (rank < 1) throw std::invalid_argument("relations: rank must be >= 1");
  RelationSet rs{rank, Flavor::RightQuantum, {}};
  for (int j = 1; j <= rank; ++j)
    for (int i1 = 1; i1 <= rank; ++i1)
      for (int i2 = i1 + 1; i2 <= rank; ++i2) rs.generators.push_back(column_relation(i1, i2, j));
  for (int i1 = 1; i1 <= rank; ++i1)
    for (int i2 = i1 + 1; i2 <= rank; ++i2)
      for (int j1 = 1; j1 <= rank; ++j1)
        for (int j2 = j1 + 1; j2 <= rank; ++j2) {
          Gen a{i1, j1}, b{i1, j2}, c{i2, j1}, d{i2, j2};
          NCPoly g = word2(a, d) - word2(d, a) - word2(c, b, LaurentPoly::q_power(-1)) +
                     word2(b, c, LaurentPoly::q_power(1));
          rs.generators.push_back(std::move(g));
        }
  return rs;
}

RelationSet full_quantum_relations(int rank) {
  RelationSet rs = right_quantum_relations(rank);
  rs.flavor = Flavor::FullQuantum;
  for (int i = 1; i <= rank; ++i)
    for (int j1 = 1; j1 <= rank; ++j1)
      for (int j2 = j1 + 1; j2 <= rank; ++j2) rs.generators.push_back(row_relation(i, j1, j2));
  for (int i1 = 1; i1 <= rank; ++i1)
    for (int i2 = i1 + 1; i2 <= rank; ++i2)
      for (int j1 = 1; j1 <= rank; ++j1)
        for (int j2 = j1 + 1; j2 <= rank; ++j2) {
          Gen b{i1, j2}, c{i2, j1};
          rs.generators.push_back(word2(c, b) - word2(b, c));
        }
  return rs;
}

RelationSet left_quantum_relations(int rank) {
  if (rank < 1) throw std::invalid_argument("relations: rank must be >= 1");
  RelationSet rs{rank, Flavor::LeftQuantum, {}};
  for (int i = 1; i <= rank; ++i)
    for (int j1 = 1; j1 <= rank; ++j1)
      for (int j2 = j1 + 1; j2 <= rank; ++j2) rs.generators.push_back(row_relation(i, j1, j2));
  for (int i1 = 1; i1 <= rank; ++i1)
    for (int i2 = i1 + 1; i2 <= rank; ++i2)
      for (int j1 = 1; j1 <= rank; ++j1)
        for (int j2 = j1 + 1; j2 <= rank; ++j2) {
          Gen a{i1, j1}, b{i1, j2}, c{i2, j1}, d{i2, j2};
          NCPoly g = word2(a, d) - word2(d, a) - word2(b, c, LaurentPoly::q_power(-1)) +
                     word2(c, b, LaurentPoly::q_power(1));
          rs.generators.push_back(std::move(g));
        }
  return rs;
}

RelationSet make_relations(int rank, Flavor flavor) {
  switch (flavor) {
    case Flavor::RightQuantum: return right_quantum_relations(rank);
    case Flavor::FullQuantum: return full_quantum_relations(rank);
    case Flavor::LeftQuantum: return left_quantum_relations(rank);
  }
  throw std::invalid_argument("make_relations: bad flavor");
}

NCPoly rewrite_normal_form(const NCPoly& p, const RelationSet& rs) {
  if (rs.flavor != Flavor::FullQuantum)
    throw std::invalid_argument(
        "rewrite_normal_form: only the full-quantum relation set orients into a "
        "terminating rewriting system");
  // Worklist keyed by the graded-lex word order; always reduce the largest
  // word, so every step strictly decreases the multiset of words.
  std::map<Word, LaurentPoly, WordLess> work;
  for (const auto& [w, c] : p.terms()) work.emplace(w, c);
  NCPoly done;
  auto push = [&work](const Word& w, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = work.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) work.erase(it);
    }
  };
  while (!work.empty()) {
    auto top = std::prev(work.end());
    Word w = top->first;
    LaurentPoly c = top->second;
    work.erase(top);
    // find the leftmost adjacent out-of-order pair
    std::size_t k = 0;
    bool sorted = true;
    for (; k + 1 < w.size(); ++k)
      if (w[k + 1] < w[k]) {
        sorted = false;
        break;
      }
    if (sorted) {
      done.add_term(w, c);
      continue;
    }
    const Gen hi = w[k], lo = w[k + 1];  // hi > lo in (row, col) order
    Word swapped = w;
    std::swap(swapped[k], swapped[k + 1]);
    if (hi.row == lo.row || hi.col == lo.col) {
      // same row (ba = q ab) or same column (ca = q ac)
      push(swapped, c.shifted(1));
    } else if (hi.col > lo.col) {
      // d a = a d + (q - q^-1) b c
      push(swapped, c);
      Word bc = w;
      bc[k] = Gen{lo.row, hi.col};
      bc[k + 1] = Gen{hi.row, lo.col};
      push(bc, c * (LaurentPoly::q_power(1) - LaurentPoly::q_power(-1)));
    } else {
      // c b = b c
      push(swapped, c);
    }
  }
  return done;
}

namespace {

// Column index of a degree-d word: base r^2 digits, leftmost letter most
// significant.
std::int64_t word_index(const Word& w, int rank) {
  std::int64_t idx = 0;
  for (const Gen& g : w) idx = idx * rank * rank + ((g.row - 1) * rank + (g.col - 1));
  return idx;
}

std::int64_t int_pow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::vector<Rational> draw_eval_points(int evals, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Rational> pts;
  while (static_cast<int>(pts.size()) < evals) {
    // numerator and denominator uniform-ish in [2, 97]; mt19937_64 output is
    // standardized, so the sequence is identical everywhere
    long num = static_cast<long>(rng() % 96 + 2);
    long den = static_cast<long>(rng() % 96 + 2);
    Rational r(num, den);
    r.canonicalize();
    if (r == 1) continue;
    bool dup = false;
    for (const auto& p : pts) dup = dup || p == r;
    if (!dup) pts.push_back(r);
  }
  return pts;
}

}  // namespace

MembershipSolver::MembershipSolver(RelationSet rs, ArithMode mode, int evals,
                                   std::uint64_t seed)
    : rs_(std::move(rs)), mode_(mode), evals_(evals) {
  if (mode_ == ArithMode::Probabilistic) {
    if (evals_ < 1)
      throw std::invalid_argument("MembershipSolver: probabilistic mode needs evals >= 1");
    points_ = draw_eval_points(evals_, seed);
  }
}

const MembershipSolver::DegreeBasis& MembershipSolver::degree_basis(int d) {
  auto it = bases_.find(d);
  if (it != bases_.end()) return it->second;
  DegreeBasis basis;
  const int rank = rs_.rank;
  const std::int64_t letters = static_cast<std::int64_t>(rank) * rank;
  basis.cols = static_cast<std::size_t>(int_pow(letters, d));
  if (mode_ == ArithMode::Exact)
    basis.exact = std::make_unique<LaurentEchelon>();
  else
    basis.prob.resize(points_.size());
  if (d >= 2) {
    // sorted (column, coefficient) views of each generator, reused per (u, v)
    struct GenTerms {
      std::vector<std::pair<std::int64_t, const LaurentPoly*>> terms;
    };
    std::vector<GenTerms> gens;
    gens.reserve(rs_.generators.size());
    for (const auto& g : rs_.generators) {
      GenTerms gt;
      for (const auto& [w, c] : g.terms()) gt.terms.emplace_back(word_index(w, rank), &c);
      std::sort(gt.terms.begin(), gt.terms.end());
      gens.push_back(std::move(gt));
    }
    for (int left = 0; left + 2 <= d; ++left) {
      const int right = d - 2 - left;
      const std::int64_t nu = int_pow(letters, left);
      const std::int64_t nv = int_pow(letters, right);
      const std::int64_t scale_u = int_pow(letters, right + 2);
      for (const auto& g : gens) {
        std::vector<std::vector<Rational>> evaluated;  // per generator term, per point
        if (mode_ == ArithMode::Probabilistic) {
          evaluated.resize(g.terms.size());
          for (std::size_t t = 0; t < g.terms.size(); ++t)
            for (const auto& pt : points_) evaluated[t].push_back(g.terms[t].second->eval(pt));
        }
        for (std::int64_t u = 0; u < nu; ++u) {
          for (std::int64_t v = 0; v < nv; ++v) {
            const std::int64_t base = u * scale_u + v;
            basis.rows += 1;
            if (mode_ == ArithMode::Exact) {
              SparseRow<LaurentPoly> row;
              row.reserve(g.terms.size());
              for (const auto& [wi, c] : g.terms) row.emplace_back(base + wi * nv, *c);
              basis.exact->absorb(std::move(row));
            } else {
              for (std::size_t pi = 0; pi < points_.size(); ++pi) {
                SparseRow<Rational> row;
                row.reserve(g.terms.size());
                for (std::size_t t = 0; t < g.terms.size(); ++t)
                  row.emplace_back(base + g.terms[t].first * nv, evaluated[t][pi]);
                basis.prob[pi].absorb(std::move(row));
              }
            }
          }
        }
      }
    }
  }
  return bases_.emplace(d, std::move(basis)).first->second;
}

MembershipCertificate MembershipSolver::member(const NCPoly& p) {
  const auto t0 = std::chrono::steady_clock::now();
  int d = 0;
  if (!is_homogeneous(p, &d))
    throw std::invalid_argument("ideal membership requires a homogeneous polynomial");
  for (const auto& [w, c] : p.terms())
    for (const Gen& g : w)
      if (g.row < 1 || g.row > rs_.rank || g.col < 1 || g.col > rs_.rank)
        throw std::invalid_argument("ideal membership: generator index out of rank range");
  MembershipCertificate cert;
  cert.degree = d;
  cert.mode = mode_;
  cert.eval_points = points_;
  if (p.is_zero()) {
    cert.verdict = true;
    cert.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return cert;
  }
  const DegreeBasis& basis = degree_basis(d);
  cert.matrix_rows = basis.rows;
  cert.matrix_cols = basis.cols;
  if (mode_ == ArithMode::Exact) {
    SparseRow<LaurentPoly> row;
    for (const auto& [w, c] : p.terms()) row.emplace_back(word_index(w, rs_.rank), c);
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    cert.verdict = basis.exact->reduces_to_zero(std::move(row));
  } else {
    cert.verdict = true;
    for (std::size_t pi = 0; pi < points_.size() && cert.verdict; ++pi) {
      SparseRow<Rational> row;
      for (const auto& [w, c] : p.terms()) {
        Rational v = c.eval(points_[pi]);
        if (v != 0) row.emplace_back(word_index(w, rs_.rank), std::move(v));
      }
      std::sort(row.begin(), row.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      cert.verdict = basis.prob[pi].reduces_to_zero(std::move(row));
    }
  }
  cert.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return cert;
}

bool MembershipSolver::zero_mod_ideal(const NCPoly& p,
                                      std::vector<MembershipCertificate>* certs) {
  bool ok = true;
  const int dmax = max_a_degree(p);
  for (int d = 0; d <= dmax; ++d) {
    NCPoly comp = graded_component(p, d);
    if (comp.is_zero()) continue;
    MembershipCertificate cert = member(comp);
    ok = ok && cert.verdict;
    if (certs) certs->push_back(std::move(cert));
  }
  return ok;
}

bool MembershipSolver::equal_mod_ideal(const NCPoly& a, const NCPoly& b,
                                       std::vector<MembershipCertificate>* certs) {
  return zero_mod_ideal(a - b, certs);
}

MembershipCertificate ideal_member(const NCPoly& p, const RelationSet& rs, ArithMode mode,
                                   int evals, std::uint64_t seed) {
  MembershipSolver solver(rs, mode, evals, seed);
  return solver.member(p);
}

}  // namespace qmm
