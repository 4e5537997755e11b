#pragma once

// Per-example verification suites and the acceptance criteria, shared by the
// command-line tool and the acceptance test binary.

#include "hball/analysis.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hball {

inline constexpr const char* kSuiteSchema = "hball.suite_report/1";
inline constexpr const char* kAcceptanceSchema = "hball.acceptance_report/1";

/// Bad command-line input or configuration (exit code 2).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct RunOptions {
    std::uint64_t seed = kDefaultSeed;
    double tol_scale = 1.0;
    /// Run independent checks on worker threads.
    bool parallel = true;

    void validate() const;
};

struct SuiteReport {
    std::string name;
    std::vector<CheckRecord> checks;
    std::vector<AnalysisReport> analyses;

    bool pass() const;
};

nlohmann::json to_json(const SuiteReport& s, const RunOptions& opts);

/// Full suite for Example 1..5; throws UsageError("unknown example ...") otherwise.
SuiteReport verify_example(int id, const RunOptions& opts);

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<CheckRecord> checks;
    double seconds = 0.0;
    double budget_seconds = 0.0;

    bool checks_pass() const;
    bool within_budget() const { return seconds < budget_seconds; }
    bool pass() const { return checks_pass() && within_budget(); }
};

inline constexpr int kCriterionCount = 11;

/// Runs one acceptance criterion (1..11).
CriterionResult run_criterion(int id, const RunOptions& opts);

/// Runs criteria 1..11 in order of id.
std::vector<CriterionResult> run_acceptance(const RunOptions& opts);

/// Deterministic summary: check records and verdicts, no timings.
nlohmann::json acceptance_json(std::span<const CriterionResult> results, const RunOptions& opts);

/// "[PASS] 3 title (0.012 s)" plus the first failing check, if any.
std::string criterion_line(const CriterionResult& r);

}  // namespace hball
