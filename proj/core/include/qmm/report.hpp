#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qmm/relations.hpp"

namespace qmm {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Json, Text };

OutputFormat format_from_string(const std::string& s);
std::string to_string(OutputFormat f);

/// Configuration error distinct from a failed verification: maps to a usage
/// error at the CLI (exit code 2), not a check failure (exit code 1).
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SuiteConfig {
  int rank = 2;
  int degree = 4;  // truncation horizon N
  Flavor flavor = Flavor::RightQuantum;
  ArithMode arith = ArithMode::Probabilistic;
  int evals = 3;
  std::uint64_t seed = 42;
  std::vector<std::string> checks;  // resolved check names, in run order
  OutputFormat format = OutputFormat::Json;
  bool timings = false;  // include elapsed_ms fields (breaks byte-identity)

  void validate() const;  // throws ConfigError
};

struct CheckRecord {
  std::string name;
  Json params;
  bool verdict = false;
  Json certificates = Json::array();
  double elapsed_ms = 0.0;
};

struct VerificationReport {
  SuiteConfig config;
  std::vector<CheckRecord> checks;
  bool overall = true;  // conjunction of the per-check verdicts
  std::string version;
};

/// JSON view of one membership certificate (eval points as "num/den" strings).
Json certificate_json(const MembershipCertificate& cert, bool timings);

/// Serialize per the report schema; JSON is newline-terminated and, with
/// timings off, byte-identical across runs with the same config and seed.
std::string emit_report(const VerificationReport& report, OutputFormat format,
                        bool timings);

}  // namespace qmm
