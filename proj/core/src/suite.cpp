#include "qmm/suite.hpp"

#include <chrono>
#include <functional>
#include <optional>

#include "qmm/opcalc.hpp"
#include "qmm/version.hpp"

namespace qmm {

namespace {

const std::vector<std::string> kLemmaChecks = {
    "x-commutation",   "x-scaling",        "column-expansion", "column-swap",
    "equal-columns",   "b-right-quantum",  "detq-b-expansion", "annihilation",
};

const std::vector<std::string> kAllChecks = {
    "master-identity", "inclusion-exclusion", "classical-limit",
    "x-commutation",   "x-scaling",           "column-expansion",
    "column-swap",     "equal-columns",       "b-right-quantum",
    "detq-b-expansion", "annihilation",
};

struct Ctx {
  const SuiteConfig& cfg;
  XProductCache xcache;
  MembershipSolver right;  // lemma machinery always reduces mod the right-quantum ideal
  std::optional<RelationSet> full;

  explicit Ctx(const SuiteConfig& c)
      : cfg(c),
        xcache(c.rank),
        right(right_quantum_relations(c.rank), c.arith, c.evals, c.seed) {}

  const RelationSet& full_relations() {
    if (!full) full = full_quantum_relations(cfg.rank);
    return *full;
  }
};

Json component_json(const ComponentVerdict& cv, bool timings) {
  Json j;
  j["degree"] = cv.degree;
  j["order"] = cv.order;
  if (cv.rewrite_mode) {
    j["mode"] = "rewrite";
  } else if (!cv.certificates.empty()) {
    const MembershipCertificate& cert = cv.certificates.front();
    j["mode"] = to_string(cert.mode);
    j["matrix_rows"] = cert.matrix_rows;
    j["matrix_cols"] = cert.matrix_cols;
    Json pts = Json::array();
    for (const auto& p : cert.eval_points)
      pts.push_back(p.get_num().get_str() + "/" + p.get_den().get_str());
    j["eval_points"] = std::move(pts);
    if (timings) j["elapsed_ms"] = cert.elapsed_ms;
  } else {
    j["mode"] = "exact";  // structural comparison, no reduction needed
  }
  j["verdict"] = cv.ok;
  if (!cv.ok && !cv.residual.empty()) j["residual_terms"] = cv.residual;
  return j;
}

Json memberships_json(const std::vector<MembershipCertificate>& certs, bool timings) {
  Json arr = Json::array();
  for (const auto& c : certs) arr.push_back(certificate_json(c, timings));
  return arr;
}

CheckRecord run_master(Ctx& ctx) {
  CheckRecord rec;
  rec.name = "master-identity";
  rec.params["rank"] = ctx.cfg.rank;
  rec.params["degree"] = ctx.cfg.degree;
  rec.params["flavor"] = to_string(ctx.cfg.flavor);
  const bool rewrite = ctx.cfg.flavor == Flavor::FullQuantum;
  rec.params["method"] = rewrite ? "rewrite" : "ideal-membership";
  if (!rewrite) rec.params["arith"] = to_string(ctx.cfg.arith);
  MasterResult mr = rewrite
                        ? master_verify_rewrite(ctx.xcache, ctx.cfg.degree, ctx.full_relations())
                        : master_verify(ctx.xcache, ctx.cfg.degree, ctx.right);
  rec.verdict = mr.ok;
  for (const auto& cv : mr.components)
    rec.certificates.push_back(component_json(cv, ctx.cfg.timings));
  return rec;
}

CheckRecord run_inclusion_exclusion(Ctx& ctx) {
  CheckRecord rec;
  rec.name = "inclusion-exclusion";
  rec.params["rank"] = ctx.cfg.rank;
  rec.params["degree"] = ctx.cfg.degree;
  rec.params["flavor"] = "right-quantum";
  rec.params["arith"] = to_string(ctx.cfg.arith);
  InclusionExclusionResult res = inclusion_exclusion_check(ctx.xcache, ctx.cfg.degree, ctx.right);
  rec.verdict = res.ok;
  rec.certificates = memberships_json(res.certificates, ctx.cfg.timings);
  return rec;
}

CheckRecord run_classical(Ctx& ctx) {
  CheckRecord rec;
  rec.name = "classical-limit";
  rec.params["rank"] = ctx.cfg.rank;
  rec.params["degree"] = ctx.cfg.degree;
  rec.verdict = classical_check(ctx.cfg.rank, ctx.cfg.degree);
  return rec;
}

CheckRecord run_x_commutation(Ctx& ctx) {
  CheckRecord rec;
  rec.name = "x-commutation";
  rec.params["rank"] = ctx.cfg.rank;
  rec.params["arith"] = to_string(ctx.cfg.arith);
  rec.verdict = true;
  if (ctx.cfg.rank < 2) rec.params["note"] = "no index pairs below rank 2";
  for (int i = 1; i <= ctx.cfg.rank; ++i)
    for (int j = i + 1; j <= ctx.cfg.rank; ++j) {
      OpCheck oc = x_commutation_check(ctx.xcache, i, j, ctx.right);
      Json c;
      c["i"] = i;
      c["j"] = j;
      c["verdict"] = oc.ok;
      c["memberships"] = memberships_json(oc.certificates, ctx.cfg.timings);
      if (!oc.ok && !oc.residual.empty()) c["residual_terms"] = oc.residual;
      rec.certificates.push_back(std::move(c));
      rec.verdict = rec.verdict && oc.ok;
    }
  return rec;
}

CheckRecord run_x_scaling(Ctx& ctx) {
  CheckRecord rec;
  rec.name = "x-scaling";
  rec.params["rank"] = ctx.cfg.rank;
  rec.params["m_max"] = 3;
  rec.verdict = true;
  for (int i = 1; i <= ctx.cfg.rank; ++i)
    for (int j = 1; j <= ctx.cfg.rank; ++j)
      for (int m = 1; m <= 3; ++m) {
        const bool ok = x_scaling_check(ctx.cfg.rank, i, j, m);
        Json c;
        c["i"] = i;
        c["j"] = j;
        c["m"] = m;
        c["verdict"] = ok;
        rec.certificates.push_back(std::move(c));
        rec.verdict = rec.verdict && ok;
      }
  return rec;
}

CheckRecord run_column_expansion(Ctx& ctx) {
  CheckRecord rec;
  rec.name = "column-expansion";
  rec.params["sizes"] = Json::array({1, 2, 3, 4});
  rec.verdict = true;
  for (int n = 1; n <= 4; ++n) {
    const bool ok = column_expansion_check(n);
    Json c;
    c["n"] = n;
    c["verdict"] = ok;
    rec.certificates.push_back(std::move(c));
    rec.verdict = rec.verdict && ok;
  }
  return rec;
}

CheckRecord run_column_swap(Ctx& ctx) {
  CheckRecord rec;
  rec.name = "column-swap";
  rec.params["rank"] = ctx.cfg.rank;
  rec.params["arith"] = to_string(ctx.cfg.arith);
  rec.verdict = true;
  if (ctx.cfg.rank < 2) rec.params["note"] = "no column pairs below rank 2";
  for (int i = 1; i <= ctx.cfg.rank; ++i)
    for (int j = i + 1; j <= ctx.cfg.rank; ++j) {
      DetCheck dc = column_swap_check(ctx.cfg.rank, i, j, ctx.right);
      Json c;
      c["i"] = i;
      c["j"] = j;
      c["verdict"] = dc.ok;
      c["memberships"] = memberships_json(dc.certificates, ctx.cfg.timings);
      rec.certificates.push_back(std::move(c));
      rec.verdict = rec.verdict && dc.ok;
    }
  return rec;
}

CheckRecord run_equal_columns(Ctx& ctx) {
  CheckRecord rec;
  rec.name = "equal-columns";
  rec.params["rank"] = ctx.cfg.rank;
  rec.params["arith"] = to_string(ctx.cfg.arith);
  rec.verdict = true;
  if (ctx.cfg.rank < 2) rec.params["note"] = "no duplicable column below rank 2";
  for (int j = 1; j < ctx.cfg.rank; ++j) {
    DetCheck dc = equal_column_vanishing_check(ctx.cfg.rank, j, ctx.right);
    Json c;
    c["column"] = j;
    c["verdict"] = dc.ok;
    c["memberships"] = memberships_json(dc.certificates, ctx.cfg.timings);
    rec.certificates.push_back(std::move(c));
    rec.verdict = rec.verdict && dc.ok;
  }
  return rec;
}

CheckRecord run_b_right_quantum(Ctx& ctx) {
  CheckRecord rec;
  rec.name = "b-right-quantum";
  rec.params["rank"] = ctx.cfg.rank;
  rec.params["arith"] = to_string(ctx.cfg.arith);
  if (ctx.cfg.rank < 2) {
    rec.params["note"] = "no 2x2 submatrix below rank 2";
    rec.verdict = true;
    return rec;
  }
  OpCheck oc = b_right_quantum_check(ctx.cfg.rank, ctx.right);
  rec.verdict = oc.ok;
  rec.certificates = memberships_json(oc.certificates, ctx.cfg.timings);
  if (!oc.ok && !oc.residual.empty()) rec.params["residual_terms"] = oc.residual;
  return rec;
}

CheckRecord run_detq_b(Ctx& ctx) {
  CheckRecord rec;
  rec.name = "detq-b-expansion";
  rec.params["rank"] = ctx.cfg.rank;
  rec.params["arith"] = to_string(ctx.cfg.arith);
  DetBCheck dc = detq_B_expansion_check(ctx.cfg.rank, ctx.right);
  rec.verdict = dc.ok;
  Json info;
  info["exact_in_free_algebra"] = dc.exact_in_free_algebra;
  rec.certificates.push_back(std::move(info));
  for (const auto& c : dc.certificates)
    rec.certificates.push_back(certificate_json(c, ctx.cfg.timings));
  return rec;
}

CheckRecord run_annihilation(Ctx& ctx) {
  CheckRecord rec;
  rec.name = "annihilation";
  const int rank = ctx.cfg.rank;
  const int cap = rank <= 2 ? 2 : 1;  // box {0..cap}^rank of multi-indices
  rec.params["rank"] = rank;
  rec.params["arith"] = to_string(ctx.cfg.arith);
  rec.params["m_entry_max"] = cap;
  rec.verdict = true;
  XVec m(static_cast<std::size_t>(rank), 0);
  while (true) {
    for (int i = 1; i <= rank; ++i) {
      OpCheck oc = annihilation_check(ctx.xcache, m, i, ctx.right);
      Json c;
      c["m"] = m;
      c["i"] = i;
      c["verdict"] = oc.ok;
      c["memberships"] = memberships_json(oc.certificates, ctx.cfg.timings);
      if (!oc.ok && !oc.residual.empty()) c["residual_terms"] = oc.residual;
      rec.certificates.push_back(std::move(c));
      rec.verdict = rec.verdict && oc.ok;
    }
    // next point in the box, odometer order
    int t = 0;
    while (t < rank && m[t] == cap) m[t++] = 0;
    if (t == rank) break;
    m[t] += 1;
  }
  return rec;
}

using Runner = CheckRecord (*)(Ctx&);

Runner runner_for(const std::string& name) {
  if (name == "master-identity") return run_master;
  if (name == "inclusion-exclusion") return run_inclusion_exclusion;
  if (name == "classical-limit") return run_classical;
  if (name == "x-commutation") return run_x_commutation;
  if (name == "x-scaling") return run_x_scaling;
  if (name == "column-expansion") return run_column_expansion;
  if (name == "column-swap") return run_column_swap;
  if (name == "equal-columns") return run_equal_columns;
  if (name == "b-right-quantum") return run_b_right_quantum;
  if (name == "detq-b-expansion") return run_detq_b;
  if (name == "annihilation") return run_annihilation;
  throw ConfigError("unknown check: " + name);
}

}  // namespace

const std::vector<std::string>& all_check_names() { return kAllChecks; }
const std::vector<std::string>& lemma_check_names() { return kLemmaChecks; }

std::vector<std::string> resolve_checks(const std::string& verb,
                                        const std::vector<std::string>& selection) {
  auto ensure_no_selection = [&] {
    if (!selection.empty())
      throw ConfigError("--select applies to the lemmas verb only");
  };
  if (verb == "verify") {
    ensure_no_selection();
    return {"master-identity", "inclusion-exclusion"};
  }
  if (verb == "classical") {
    ensure_no_selection();
    return {"classical-limit"};
  }
  if (verb == "lemmas") {
    if (selection.empty()) return kLemmaChecks;
    for (const auto& s : selection) {
      bool known = false;
      for (const auto& l : kLemmaChecks) known = known || l == s;
      if (!known) throw ConfigError("unknown lemma check: " + s);
    }
    std::vector<std::string> out;  // canonical order, selection deduplicated
    for (const auto& name : kLemmaChecks)
      for (const auto& s : selection)
        if (s == name) {
          out.push_back(name);
          break;
        }
    return out;
  }
  if (verb == "all") {
    ensure_no_selection();
    return kAllChecks;
  }
  throw ConfigError("unknown verb: " + verb);
}

VerificationReport run_suite(const SuiteConfig& config) {
  config.validate();
  VerificationReport report;
  report.config = config;
  report.version = kVersion;
  Ctx ctx(config);
  for (const auto& name : config.checks) {
    Runner run = runner_for(name);
    const auto t0 = std::chrono::steady_clock::now();
    CheckRecord rec = run(ctx);
    rec.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    report.overall = report.overall && rec.verdict;
    report.checks.push_back(std::move(rec));
  }
  return report;
}

}  // namespace qmm
