#pragma once

#include <string>
#include <vector>

#include "qmm/report.hpp"

namespace qmm {

/// Check names understood by run_suite, in canonical run order.
const std::vector<std::string>& all_check_names();
const std::vector<std::string>& lemma_check_names();

/// Resolve a CLI verb ("verify", "lemmas", "classical", "all") plus an
/// optional selection list into the ordered check list.  Throws ConfigError
/// for unknown verbs or check names.
std::vector<std::string> resolve_checks(const std::string& verb,
                                        const std::vector<std::string>& selection);

/// Execute every check in config.checks against shared relation/X-product
/// state.  Results are appended in order; nothing is re-run or mutated.
VerificationReport run_suite(const SuiteConfig& config);

}  // namespace qmm
