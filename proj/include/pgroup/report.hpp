/**
 * @file report.hpp
 * @brief Run configuration, the per-entry verification driver and report formatting
 *        shared by the command-line tool and the acceptance runner.
 */
#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "pgroup/catalog.hpp"
#include "pgroup/errors.hpp"
#include "pgroup/theorems.hpp"

namespace pgroup {

/// An invalid run configuration; the message names the offending flag.
class ConfigError : public Error {
public:
    using Error::Error;
};

struct RunConfig {
    CatalogRanges ranges;
    SuiteConfig suite;
    unsigned jobs = 1;
    bool timing = false;
};

/// Throws ConfigError naming the flag: p must be an odd prime, bounds positive,
/// budgets at least 27, types within 1..19.
void validate(const RunConfig& cfg);

/// Runs the theorem suite over the entries, `jobs` entries at a time. Results come
/// back in entry order whatever the scheduling.
std::vector<CheckResult> verify_entries(const std::vector<CatalogEntry>& entries, const SuiteConfig& cfg,
                                        unsigned jobs = 1);

struct VerifyCounts {
    std::size_t pass = 0, fail = 0, skipped = 0;
};
VerifyCounts count_verdicts(const std::vector<CheckResult>& results);

/// One record per result with fields in a fixed order; `seconds` only when `timing`
/// is set so that reports of identical runs are byte-identical.
nlohmann::ordered_json to_json(const CheckResult& r, bool timing = false);
std::string to_jsonl(const std::vector<CheckResult>& results, bool timing = false);
/// Per-check summary table followed by every failure and skip.
std::string to_table(const std::vector<CheckResult>& results);

/// Structure of one catalog entry: order, center tag and decomposition, symplectic
/// rank, Darboux basis, conjugacy class profile and fingerprint.
nlohmann::json group_report(const CatalogEntry& e, std::size_t group_budget = kDefaultGroupBudget);
std::string group_report_text(const nlohmann::json& report);

}  // namespace pgroup
