#pragma once

// Combined equivalence report for a generator at a boundary point.

#include "hball/boundary_analysis.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hball {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kAnalysisSchema = "hball.analysis_report/1";

enum class CheckStatus { Pass, Fail, NotApplicable };

std::string to_string(CheckStatus s);

/// One named check: measured value against [lower, upper].
struct CheckRecord {
    std::string name;
    CheckStatus status = CheckStatus::NotApplicable;
    double value = 0.0;
    std::optional<double> lower;
    std::optional<double> upper;
    double tolerance = 0.0;
    std::string note;

    bool failed() const noexcept { return status == CheckStatus::Fail; }
};

/// Pass iff value lies in [lower, upper] (absent bounds are open); NaN fails.
CheckRecord make_check(std::string name, double value, std::optional<double> lower, std::optional<double> upper,
                       double tolerance, std::string note = {});
CheckRecord at_most(std::string name, double value, double tol, std::string note = {});
CheckRecord at_least(std::string name, double value, double bound, double tol, std::string note = {});
CheckRecord flag_check(std::string name, bool ok, std::string note = {});
CheckRecord not_applicable(std::string name, std::string reason);

nlohmann::json to_json(const CheckRecord& c);

/// Base tolerances; every value is multiplied by the run's tolerance scale.
struct Tolerances {
    double alpha_beta = 1e-3;
    double gamma_below = 1e-3;
    double gamma_above = 1e-1;
    double psi = 1e-6;
    double step3 = 1e-12;
    double step1 = 1e-10;
    double monotone = 1e-12;
    double herglotz = 1e-9;
    double real_limit = 1e-6;
    double generator_fd = 1e-6;

    Tolerances scaled(double s) const;
};

struct AnalysisConfig {
    std::uint64_t seed = kDefaultSeed;
    double tol_scale = 1.0;
    std::size_t beta_points = 4000;
    std::size_t gamma_points = 1000;
    std::size_t monotone_pairs = 2000;
    std::size_t identity_points = 100;
    std::size_t step1_points = 100;
    std::size_t lambda_samples = 1000;
    std::vector<double> t_grid = default_t_grid();

    /// Throws DomainError on non-positive sizes or tol_scale.
    void validate() const;
};

struct AnalysisReport {
    std::string generator;
    std::size_t dim = 1;
    bool holomorphic = false;
    CVec tau = CVec::zeros(1);
    AnalysisConfig config;

    NullPointResult null_point;
    RadialProfile alpha;
    BetaEstimate beta;
    GammaEstimate gamma;
    std::vector<CheckRecord> checks;
    bool fixed_point_free_flag = false;

    bool null_point_ok() const noexcept { return null_point.ok; }
    std::optional<double> alpha_hat() const { return alpha.limit; }
    bool pass() const;
};

nlohmann::json to_json(const AnalysisReport& r);

/// Runs the null-point, alpha, beta, gamma, identity and monotonicity
/// checks. Check failures are recorded, never thrown.
AnalysisReport analyze(const Generator& gen, const Semigroup& sg, const BoundaryPoint& tau,
                       const AnalysisConfig& cfg = {});

}  // namespace hball
