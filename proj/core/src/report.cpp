#include "qmm/report.hpp"

#include <sstream>

namespace qmm {

OutputFormat format_from_string(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "text") return OutputFormat::Text;
  throw ConfigError("unknown output format: " + s);
}

std::string to_string(OutputFormat f) { return f == OutputFormat::Json ? "json" : "text"; }

void SuiteConfig::validate() const {
  if (rank < 1) throw ConfigError("rank must be >= 1");
  if (degree < 0) throw ConfigError("degree must be >= 0");
  if (arith == ArithMode::Probabilistic && evals < 1)
    throw ConfigError("probabilistic mode needs evals >= 1");
  if (flavor == Flavor::LeftQuantum)
    throw ConfigError("the left-quantum relation set is generation-only; pick right-quantum or full-quantum");
  if (rank > 4) throw ConfigError("rank capped at 4 (degree bases grow as rank^(2 degree))");
}

namespace {

std::string rational_str(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace

Json certificate_json(const MembershipCertificate& cert, bool timings) {
  Json j;
  j["degree"] = cert.degree;
  j["mode"] = to_string(cert.mode);
  j["verdict"] = cert.verdict;
  j["matrix_rows"] = cert.matrix_rows;
  j["matrix_cols"] = cert.matrix_cols;
  Json pts = Json::array();
  for (const auto& p : cert.eval_points) pts.push_back(rational_str(p));
  j["eval_points"] = std::move(pts);
  if (timings) j["elapsed_ms"] = cert.elapsed_ms;
  return j;
}

std::string emit_report(const VerificationReport& report, OutputFormat format,
                        bool timings) {
  if (format == OutputFormat::Json) {
    Json j;
    Json cfg;
    cfg["rank"] = report.config.rank;
    cfg["degree"] = report.config.degree;
    cfg["flavor"] = to_string(report.config.flavor);
    cfg["arith"] = to_string(report.config.arith);
    cfg["evals"] = report.config.evals;
    cfg["seed"] = report.config.seed;
    cfg["checks"] = report.config.checks;
    j["config"] = std::move(cfg);
    Json checks = Json::array();
    for (const auto& rec : report.checks) {
      Json c;
      c["name"] = rec.name;
      c["params"] = rec.params;
      c["verdict"] = rec.verdict;
      c["degree_certificates"] = rec.certificates;
      if (timings) c["elapsed_ms"] = rec.elapsed_ms;
      checks.push_back(std::move(c));
    }
    j["checks"] = std::move(checks);
    j["overall"] = report.overall;
    j["version"] = report.version;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "verification suite v" << report.version << "\n"
     << "  rank " << report.config.rank << ", degree " << report.config.degree << ", "
     << to_string(report.config.flavor) << ", " << to_string(report.config.arith);
  if (report.config.arith == ArithMode::Probabilistic)
    os << " (evals " << report.config.evals << ", seed " << report.config.seed << ")";
  os << "\n\n";
  for (const auto& rec : report.checks) {
    os << "  [" << (rec.verdict ? "PASS" : "FAIL") << "] " << rec.name;
    if (!rec.params.empty()) os << "  " << rec.params.dump();
    if (timings) os << "  (" << rec.elapsed_ms << " ms)";
    os << "\n";
  }
  os << "\noverall: " << (report.overall ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace qmm
