#include "hball/analysis.hpp"

#include "hball/format.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hball {

namespace {

enum Stream : std::uint64_t { kBeta, kGamma, kIdentity, kPairs, kStep1, kLambda, kFixed };

nlohmann::json opt_number(const std::optional<double>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

double max_fd_deviation(const Generator& gen, const Semigroup& sg, std::span<const BallPoint> xs) {
    double worst = 0.0;
    for (const auto& x : xs) {
        worst = std::max(worst, distance(generator_from_semigroup_fd(sg, x), gen(x)));
    }
    return worst;
}

double min_fixed_point_gap(const Semigroup& sg, std::size_t dim, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<BallPoint> xs{BallPoint(CVec::zeros(dim))};
    for (int i = 0; i < 100; ++i) {
        xs.push_back(random_ball_point(rng, dim, 0.95));
    }
    double gap = std::numeric_limits<double>::infinity();
    for (const double t : {0.5, 1.0, 2.0}) {
        for (const auto& x : xs) {
            gap = std::min(gap, distance(sg.evaluate(t, x), x.vec()));
        }
    }
    return gap;
}

}  // namespace

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::NotApplicable: return "not_applicable";
    }
    return "unknown";
}

CheckRecord make_check(std::string name, double value, std::optional<double> lower, std::optional<double> upper,
                       double tolerance, std::string note) {
    CheckRecord c;
    c.name = std::move(name);
    c.value = value;
    c.lower = lower;
    c.upper = upper;
    c.tolerance = tolerance;
    c.note = std::move(note);
    const bool ok = !std::isnan(value) && (!lower || value >= *lower) && (!upper || value <= *upper);
    c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    return c;
}

CheckRecord at_most(std::string name, double value, double tol, std::string note) {
    return make_check(std::move(name), value, std::nullopt, tol, tol, std::move(note));
}

CheckRecord at_least(std::string name, double value, double bound, double tol, std::string note) {
    return make_check(std::move(name), value, bound - tol, std::nullopt, tol, std::move(note));
}

CheckRecord flag_check(std::string name, bool ok, std::string note) {
    return make_check(std::move(name), ok ? 1.0 : 0.0, 1.0, std::nullopt, 0.0, std::move(note));
}

CheckRecord not_applicable(std::string name, std::string reason) {
    CheckRecord c;
    c.name = std::move(name);
    c.value = std::numeric_limits<double>::quiet_NaN();
    c.status = CheckStatus::NotApplicable;
    c.note = std::move(reason);
    return c;
}

nlohmann::json to_json(const CheckRecord& c) {
    nlohmann::json j{{"name", c.name},
                     {"status", to_string(c.status)},
                     {"value", c.status == CheckStatus::NotApplicable ? nlohmann::json(nullptr) : nlohmann::json(c.value)},
                     {"lower", opt_number(c.lower)},
                     {"upper", opt_number(c.upper)},
                     {"tolerance", c.tolerance}};
    if (!c.note.empty()) {
        j["note"] = c.note;
    }
    return j;
}

Tolerances Tolerances::scaled(double s) const {
    Tolerances t = *this;
    for (double* v : {&t.alpha_beta, &t.gamma_below, &t.gamma_above, &t.psi, &t.step3, &t.step1, &t.monotone,
                      &t.herglotz, &t.real_limit, &t.generator_fd}) {
        *v *= s;
    }
    return t;
}

void AnalysisConfig::validate() const {
    if (!(tol_scale > 0.0) || !std::isfinite(tol_scale)) {
        throw DomainError("tolerance scale must be positive");
    }
    for (const std::size_t n : {beta_points, gamma_points, monotone_pairs, identity_points, step1_points, lambda_samples}) {
        if (n == 0) {
            throw DomainError("sample counts must be positive");
        }
    }
    if (t_grid.empty()) {
        throw DomainError("t grid must not be empty");
    }
    for (const double t : t_grid) {
        if (!(t > 0.0 && t <= kMaxFlowTime)) {
            throw DomainError("t grid entries must lie in (0, 50]");
        }
    }
}

bool AnalysisReport::pass() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.failed(); });
}

AnalysisReport analyze(const Generator& gen, const Semigroup& sg, const BoundaryPoint& tau, const AnalysisConfig& cfg) {
    cfg.validate();
    for (const std::size_t d : {gen.dim(), sg.dim()}) {
        if (d != tau.dim()) {
            throw DimensionMismatch(d, tau.dim());
        }
    }
    const Tolerances tol = Tolerances{}.scaled(cfg.tol_scale);
    const std::size_t dim = gen.dim();

    AnalysisReport rep;
    rep.generator = gen.name();
    rep.dim = dim;
    rep.holomorphic = gen.is_holomorphic();
    rep.tau = tau.vec();
    rep.config = cfg;
    auto& checks = rep.checks;

    Rng id_rng(derive_seed(cfg.seed, kIdentity));
    std::vector<BallPoint> id_points;
    for (std::size_t i = 0; i < cfg.identity_points; ++i) {
        id_points.push_back(random_ball_point(id_rng, dim, 0.9));
    }

    checks.push_back(at_most("generator_consistency", max_fd_deviation(gen, sg, id_points), tol.generator_fd,
                             "max ||fd(F) - f|| on sampled points"));

    rep.null_point = check_null_point(gen, tau);
    checks.push_back(flag_check("null_point", rep.null_point.ok,
                                "||f(r tau)|| at end of schedule = " + format_real(rep.null_point.final_norm)));

    rep.alpha = radial_profile(gen, tau);
    rep.beta = estimate_beta(gen, tau, Sampler{derive_seed(cfg.seed, kBeta), cfg.beta_points, 0.3, dim});
    rep.gamma = empirical_gamma(sg, tau, Sampler{derive_seed(cfg.seed, kGamma), cfg.gamma_points, 0.3, dim}, cfg.t_grid);

    const auto alpha = rep.alpha.limit;
    const std::string no_alpha = "alpha verdict " + to_string(rep.alpha.verdict) + ": equivalence not asserted";
    if (alpha) {
        const double b = rep.beta.value;
        checks.push_back(at_most("alpha_equals_beta", std::abs(*alpha - b), tol.alpha_beta));
        checks.push_back(make_check("gamma_maximal", rep.gamma.value, b - tol.gamma_below, b + tol.gamma_above,
                                    tol.gamma_below, "min sampled gamma within [beta - tol, beta + 0.1 scale]"));
    } else {
        checks.push_back(not_applicable("alpha_equals_beta", no_alpha));
        checks.push_back(not_applicable("gamma_maximal", no_alpha));
    }

    if (!gen.is_holomorphic()) {
        const std::string why = "generator is not holomorphic";
        checks.push_back(not_applicable("holomorphic_real_limit", why));
        checks.push_back(not_applicable("herglotz_positivity", why));
    } else if (!alpha) {
        checks.push_back(not_applicable("holomorphic_real_limit", no_alpha));
        checks.push_back(not_applicable("herglotz_positivity", no_alpha));
    } else {
        checks.push_back(at_most("holomorphic_real_limit", holomorphic_real_limit_check(gen, tau), tol.real_limit,
                                 "max |Im q| over the last 5 radii"));
        const auto lambdas = herglotz_lambda_samples(derive_seed(cfg.seed, kLambda), cfg.lambda_samples);
        checks.push_back(at_least("herglotz_positivity", herglotz_positivity(gen, tau, *alpha, lambdas), 0.0,
                                  tol.herglotz, "min Re[g/-(1-lambda)^2] with beta = alpha"));
    }

    {
        Rng rng(derive_seed(cfg.seed, kPairs));
        double worst = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < cfg.monotone_pairs; ++i) {
            const BallPoint x = random_ball_point(rng, dim, 0.995);
            const BallPoint y = random_ball_point(rng, dim, 0.995);
            worst = std::min(worst, monotonicity_defect(gen, x, y));
        }
        checks.push_back(at_least("monotonicity", worst, 0.0, tol.monotone, "min defect over sampled pairs"));
    }

    {
        double worst = 0.0;
        for (const auto& x : id_points) {
            worst = std::max(worst, psi_derivative_identity(gen, sg, x, tau));
        }
        checks.push_back(at_most("psi_identity", worst, tol.psi));
    }

    {
        double worst = 0.0;
        for (const double r : default_radial_schedule()) {
            worst = std::max(worst, radial_pairing_residual(gen, tau, r));
        }
        checks.push_back(at_most("radial_pairing_identity", worst, tol.step3, "relative residual over the schedule"));
    }

    {
        Rng rng(derive_seed(cfg.seed, kStep1));
        const auto schedule = default_radial_schedule();
        double worst = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < cfg.step1_points; ++i) {
            const BallPoint x = random_ball_point(rng, dim, 0.99);
            for (const double r : schedule) {
                worst = std::min(worst, radial_monotonicity_gap(gen, x, tau, r));
            }
        }
        checks.push_back(at_least("radial_monotonicity", worst, 0.0, tol.step1,
                                  "min gap of the monotonicity inequality at y = r tau"));
    }

    rep.fixed_point_free_flag = alpha && *alpha > 0.0;
    if (rep.fixed_point_free_flag) {
        const double gap = min_fixed_point_gap(sg, dim, derive_seed(cfg.seed, kFixed));
        checks.push_back(make_check("no_fixed_point_spot", gap, std::nullopt, std::nullopt, 0.0,
                                    "min ||F_t(x) - x|| over sampled x, t in {0.5, 1, 2}"));
        if (!(gap > 0.0)) {
            checks.back().status = CheckStatus::Fail;
        }
    } else {
        checks.push_back(not_applicable("no_fixed_point_spot", "alpha is not positive"));
    }
    return rep;
}

nlohmann::json to_json(const AnalysisReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) {
        checks.push_back(to_json(c));
    }
    const auto& p = r.alpha.points;
    nlohmann::json alpha{{"verdict", to_string(r.alpha.verdict)},
                         {"limit", opt_number(r.alpha.limit)},
                         {"divergence_sign", r.alpha.divergence_sign},
                         {"r_last", p.empty() ? nlohmann::json(nullptr) : nlohmann::json(p.back().r)},
                         {"q_last", p.empty() ? nlohmann::json(nullptr) : nlohmann::json(p.back().q)}};
    if (r.alpha.failure) {
        alpha["failure"] = *r.alpha.failure;
    }
    return nlohmann::json{
        {"schema", kAnalysisSchema},
        {"version", kVersion},
        {"inputs",
         {{"generator", r.generator},
          {"dim", r.dim},
          {"holomorphic", r.holomorphic},
          {"tau", format_vector(r.tau)},
          {"tol_scale", r.config.tol_scale}}},
        {"seeds", {{"sampler", r.config.seed}}},
        {"schedules",
         {{"radial", {{"k_min", 3}, {"k_max", 30}}},
          {"null_point", {{"k_min", 3}, {"k_max", 48}}},
          {"t_grid", r.config.t_grid},
          {"beta_points", r.config.beta_points},
          {"gamma_points", r.config.gamma_points},
          {"monotone_pairs", r.config.monotone_pairs},
          {"identity_points", r.config.identity_points}}},
        {"null_point", {{"ok", r.null_point.ok}, {"final_norm", r.null_point.final_norm}}},
        {"alpha", alpha},
        {"beta",
         {{"value", r.beta.value},
          {"argmin", format_vector(r.beta.argmin)},
          {"evaluations", r.beta.evaluations},
          {"on_boundary_shell", r.beta.on_boundary_shell},
          {"suspect_unbounded", r.beta.suspect_unbounded},
          {"reading", "inf over the ball of 2 Re <f(x), x*>"}}},
        {"gamma",
         {{"value", r.gamma.value},
          {"argmin_x", format_vector(r.gamma.argmin_x)},
          {"argmin_t", r.gamma.argmin_t},
          {"samples", r.gamma.samples},
          {"skipped", r.gamma.skipped}}},
        {"checks", checks},
        {"fixed_point_free_flag", r.fixed_point_free_flag},
        {"pass", r.pass()}};
}

}  // namespace hball
