#include "hball/suites.hpp"

#include "hball/claims.hpp"
#include "hball/format.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <numbers>
#include <sstream>

namespace hball {

namespace {

using Checks = std::vector<CheckRecord>;

BuiltinSpec spec_of(BuiltinKind kind, std::size_t dim = 1, double chi = 1.0) {
    BuiltinSpec s;
    s.kind = kind;
    s.dim = dim;
    s.chi = chi;
    return s;
}

const BuiltinSpec kEx1 = spec_of(BuiltinKind::Example1);
const BuiltinSpec kEx1Chi2 = spec_of(BuiltinKind::Example1, 1, 2.0);
const BuiltinSpec kEx2 = spec_of(BuiltinKind::Example2, 2);
const BuiltinSpec kEx3 = spec_of(BuiltinKind::Example3, 2);
const BuiltinSpec kEx4 = spec_of(BuiltinKind::Example4);
const BuiltinSpec kEx5 = spec_of(BuiltinKind::Example5);

BoundaryPoint e1(std::size_t dim) { return BoundaryPoint(CVec::unit(dim, 0)); }
BoundaryPoint ex3_tau(int k) {
    const Complex first[3] = {1.0, Complex(0, 1), Complex(0, -1)};
    return BoundaryPoint(CVec({first[k], 0.0}));
}

std::uint64_t seed_for(const RunOptions& o, std::uint64_t tag) { return derive_seed(o.seed, 1000 + tag); }

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Sampling radius for the ellipsoid claims: d_tau(w) is only resolved to
// about eps / (1 - |w|) relative, so images must stay clear of the sphere.
constexpr double kInvarianceMaxNorm = 1.0 - 1e-4;

// alpha within tol of the expected value; a missing limit fails with the verdict as note.
CheckRecord alpha_check(std::string name, const BuiltinSpec& spec, const BoundaryPoint& tau, double expected,
                        double tol) {
    const RadialProfile prof = radial_profile(builtin_generator(spec), tau);
    if (!prof.limit) {
        return make_check(std::move(name), kNaN, std::nullopt, tol, tol, "verdict " + to_string(prof.verdict));
    }
    return at_most(std::move(name), std::abs(*prof.limit - expected), tol,
                   "alpha = " + format_real(*prof.limit) + ", expected " + format_real(expected));
}

double max_semigroup_residual(const Semigroup& sg, std::uint64_t seed, std::size_t n) {
    Rng rng(seed);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const BallPoint x = random_ball_point(rng, sg.dim(), 0.9);
        const double t = rng.uniform(0.0, 3.0);
        const double s = rng.uniform(0.0, 3.0);
        worst = std::max(worst, semigroup_residual(sg, t, s, x));
    }
    return worst;
}

double max_identity_defect(const Semigroup& sg, std::uint64_t seed, std::size_t n) {
    Rng rng(seed);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const BallPoint x = random_ball_point(rng, sg.dim(), 0.99);
        worst = std::max(worst, distance(sg.evaluate(0.0, x), x.vec()));
    }
    return worst;
}

double max_nonexpansive_defect(const Semigroup& sg, std::uint64_t seed, std::size_t n) {
    Rng rng(seed);
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const BallPoint x = random_ball_point(rng, sg.dim(), 0.99);
        const BallPoint y = random_ball_point(rng, sg.dim(), 0.99);
        worst = std::max(worst, nonexpansive_defect(sg, rng.uniform(0.0, 5.0), x, y));
    }
    return worst;
}

double min_monotone_defect(const Generator& gen, std::uint64_t seed, std::size_t n) {
    Rng rng(seed);
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const BallPoint x = random_ball_point(rng, gen.dim(), 0.999);
        const BallPoint y = random_ball_point(rng, gen.dim(), 0.999);
        worst = std::min(worst, monotonicity_defect(gen, x, y));
    }
    return worst;
}

double max_psi_residual(const BuiltinSpec& spec, const BoundaryPoint& tau, std::uint64_t seed, std::size_t n) {
    const Generator gen = builtin_generator(spec);
    const Semigroup sg = builtin_semigroup(spec);
    Rng rng(seed);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        worst = std::max(worst, psi_derivative_identity(gen, sg, random_ball_point(rng, spec.dim, 0.9), tau));
    }
    return worst;
}

double max_ellipsoid_excess(const BuiltinSpec& spec, const BoundaryPoint& tau, double rate, std::uint64_t seed,
                            std::size_t n) {
    const Semigroup sg = builtin_semigroup(spec);
    const auto samples = sample_flow_pairs(Sampler{seed, n, 0.3, spec.dim}, tau, kInvarianceMaxNorm, 5.0);
    double worst = -1.0;
    for (const auto& s : samples) {
        worst = std::max(worst, ellipsoid_excess(sg, tau, rate, s.z, s.t));
    }
    return worst;
}

double integrator_fidelity(const BuiltinSpec& spec, const CVec& x0) {
    return integrator_deviation(builtin_generator(spec), builtin_semigroup(spec), BallPoint(x0), 5.0, 0.05);
}

// ---- acceptance criteria ----

Checks criterion1(const RunOptions& o) {
    return {alpha_check("example2.alpha", kEx2, e1(2), -1.0, 1e-6 * o.tol_scale)};
}

Checks criterion2(const RunOptions& o) {
    const double tol = 1e-6 * o.tol_scale;
    return {alpha_check("example3.alpha_tau1", kEx3, ex3_tau(0), 1.0, tol),
            alpha_check("example3.alpha_tau2", kEx3, ex3_tau(1), -2.0, tol),
            alpha_check("example3.alpha_tau3", kEx3, ex3_tau(2), -2.0, tol)};
}

Checks criterion3(const RunOptions& o) {
    const double s = o.tol_scale;
    Checks out;
    out.push_back(at_most("example2.ellipsoid_invariance", max_ellipsoid_excess(kEx2, e1(2), -1.0, seed_for(o, 3), 10000),
                          1e-9 * s, "max d(F_t z) / (e^t d(z)) - 1 over 10^4 (z, t)"));
    const GammaEstimate g =
        empirical_gamma(builtin_semigroup(kEx2), e1(2), Sampler{seed_for(o, 31), 1000, 0.3, 2}, default_t_grid());
    out.push_back(make_check("example2.gamma_min", g.value, -1.0 - 1e-9 * s, -1.0 + 1e-2 * s, 1e-9 * s,
                             "min sampled gamma"));
    return out;
}

Checks criterion4(const RunOptions& o) {
    const Semigroup sg = builtin_semigroup(kEx3);
    const auto samples = sample_flow_pairs(Sampler{seed_for(o, 4), 1000, 0.3, 2}, ex3_tau(0), kInvarianceMaxNorm, 5.0);
    return {at_most("example3.triple_intersection", triple_intersection_excess(sg, samples), 1e-9 * o.tol_scale,
                    "max relative excess over the three ellipsoids")};
}

Checks criterion5(const RunOptions& o) {
    const double s = o.tol_scale;
    Checks out;
    out.push_back(at_most("example1.inequality_n", max_ellipsoid_excess(kEx1, e1(1), 1.0, seed_for(o, 5), 10000),
                          1e-9 * s, "max d1(F_t z) / (e^-t d1(z)) - 1"));
    out.push_back(at_least("example1_chi2.monotonicity", min_monotone_defect(builtin_generator(kEx1Chi2), seed_for(o, 51), 10000),
                           0.0, 1e-12 * s, "min defect over 10^4 pairs"));
    const RadialProfile prof = radial_profile(builtin_generator(kEx1Chi2), e1(1));
    double q_dev = 0.0;
    for (const auto& p : prof.points) {
        q_dev = std::max(q_dev, std::abs(p.q - 1.0));
    }
    out.push_back(at_most("example1_chi2.q_identically_one", q_dev, 1e-12 * s));
    out.push_back(alpha_check("example1_chi2.alpha", kEx1Chi2, e1(1), 1.0, 1e-6 * s));
    return out;
}

Checks criterion6(const RunOptions&) {
    const Generator gen = builtin_generator(kEx4);
    const RadialProfile prof = radial_profile(gen, e1(1));
    double q14 = kNaN;
    for (const auto& p : prof.points) {
        if (p.r == 1.0 - std::ldexp(1.0, -14)) {
            q14 = p.q;
        }
    }
    const NullPointResult np = check_null_point(gen, e1(1));
    return {flag_check("example4.diverged", prof.verdict == RadialVerdict::Diverged,
                       "verdict " + to_string(prof.verdict) + ": no angular derivative at 1"),
            make_check("example4.q_at_k14", q14, std::nullopt, -250.0, 0.0, "q(1 - 2^-14), closed form 2 - 2/sqrt(1-r)"),
            flag_check("example4.null_point", np.ok, "final ||f|| = " + format_real(np.final_norm))};
}

Checks criterion7(const RunOptions& o) {
    const Semigroup sg = builtin_semigroup(kEx5);
    Rng rng(seed_for(o, 7));
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        double u = rng.uniform();
        while (u == 0.0) {
            u = rng.uniform();
        }
        const double x = (i + u) / 100.0;
        for (const double t : {0.5, 1.0, 2.0}) {
            worst = std::max(worst, power_law_error(sg, x, t));
        }
    }
    return {at_most("example5.power_law", worst, 1e-8 * o.tol_scale, "relative error of d1(F_t x) = d1(x)^(e^-2t)"),
            make_check("example5.ratio_near_boundary", d1_ratio(sg, 1.0 - 1e-4, 1.0), 1e3, std::nullopt, 0.0,
                       "d1(F_1 x) / d1(x) at x = 1 - 1e-4")};
}

Checks criterion8(const RunOptions& o) {
    struct Case {
        const char* name;
        BuiltinSpec spec;
        BoundaryPoint tau;
    };
    const Case cases[] = {{"example1", kEx1, e1(1)}, {"example2", kEx2, e1(2)}, {"example3_tau1", kEx3, ex3_tau(0)}};
    const double s = o.tol_scale;
    Checks out;
    for (const auto& c : cases) {
        AnalysisConfig cfg;
        cfg.seed = o.seed;
        cfg.tol_scale = s;
        const AnalysisReport rep = analyze(builtin_generator(c.spec), builtin_semigroup(c.spec), c.tau, cfg);
        const double a = rep.alpha.limit.value_or(kNaN);
        out.push_back(at_most(std::string(c.name) + ".alpha_equals_beta", std::abs(a - rep.beta.value), 1e-3 * s,
                              "alpha = " + format_real(a) + ", beta = " + format_real(rep.beta.value)));
        out.push_back(at_least(std::string(c.name) + ".gamma_lower", rep.gamma.value, rep.beta.value, 1e-3 * s,
                               "gamma = " + format_real(rep.gamma.value)));
    }
    return out;
}

Checks criterion9(const RunOptions& o) {
    const double s = o.tol_scale;
    struct Case {
        const char* name;
        BuiltinSpec spec;
        BoundaryPoint tau;
    };
    const Case cases[] = {{"example1", kEx1, e1(1)},         {"example1_chi2", kEx1Chi2, e1(1)},
                          {"example2", kEx2, e1(2)},         {"example3_tau1", kEx3, ex3_tau(0)},
                          {"example3_tau2", kEx3, ex3_tau(1)}, {"example4", kEx4, e1(1)},
                          {"example5", kEx5, e1(1)}};
    Checks out;
    std::uint64_t tag = 90;
    for (const auto& c : cases) {
        out.push_back(at_most(std::string(c.name) + ".psi_identity", max_psi_residual(c.spec, c.tau, seed_for(o, tag++), 100),
                              1e-6 * s));
    }

    double step3 = 0.0;
    for (const auto& c : cases) {
        const Generator gen = builtin_generator(c.spec);
        for (const double r : default_radial_schedule()) {
            step3 = std::max(step3, radial_pairing_residual(gen, c.tau, r));
        }
    }
    out.push_back(at_most("radial_pairing_identity", step3, 1e-12 * s, "relative, all examples over the schedule"));

    Rng rng(seed_for(o, 99));
    double step5 = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const Complex lambda = std::polar(0.999 * std::sqrt(rng.uniform()), rng.uniform(-std::numbers::pi, std::numbers::pi));
        const Complex f(rng.normal(), rng.normal());
        step5 = std::max(step5, pairing_identity_residual(f, lambda));
    }
    out.push_back(at_most("support_pairing_identity", step5, 1e-12 * s, "relative, 10^3 random (lambda, f)"));

    const Generator g2 = builtin_generator(kEx2);
    double slice = 0.0;
    for (const Complex lambda : herglotz_lambda_samples(seed_for(o, 98), 1000)) {
        slice = std::max(slice, std::abs(herglotz_ratio(g2, e1(2), -1.0, lambda) - 0.5));
    }
    out.push_back(at_most("example2.herglotz_slice", slice, 1e-10 * s, "max |Re[g/-(1-lambda)^2] - 1/2|"));
    return out;
}

Checks criterion10(const RunOptions& o) {
    const double s = o.tol_scale;
    const double flow_tol = std::max(10.0 * IntegratorConfig{}.rel_tol, 1e-6) * s;
    Checks out;
    out.push_back(at_most("example1.integrator", integrator_fidelity(kEx1, CVec({Complex(-0.5, 0.5)})), flow_tol));
    out.push_back(at_most("example1_chi2.integrator", integrator_fidelity(kEx1Chi2, CVec({Complex(0.3, 0.4)})), flow_tol));
    out.push_back(at_most("example2.integrator", integrator_fidelity(kEx2, CVec({0.5, 0.1})), flow_tol));
    out.push_back(at_most("example4.integrator", integrator_fidelity(kEx4, CVec({Complex(0.2, 0.3)})), flow_tol));
    out.push_back(at_most("example5.integrator", integrator_fidelity(kEx5, CVec({Complex(0.5, 0.2)})), flow_tol));

    const BuiltinSpec all[] = {kEx1, kEx1Chi2, kEx2, kEx3, kEx4, kEx5, spec_of(BuiltinKind::Zero, 2),
                               spec_of(BuiltinKind::ScaledIdentity, 2)};
    double residual = 0.0;
    double identity = 0.0;
    std::uint64_t tag = 100;
    for (const auto& spec : all) {
        const Semigroup sg = builtin_semigroup(spec);
        residual = std::max(residual, max_semigroup_residual(sg, seed_for(o, tag++), 200));
        identity = std::max(identity, max_identity_defect(sg, seed_for(o, tag++), 200));
    }
    out.push_back(at_most("semigroup_residual", residual, 1e-9 * s, "all closed forms, random (t, s, x)"));
    out.push_back(at_most("flow_at_zero_is_identity", identity, 1e-12 * s));
    return out;
}

struct CriterionDef {
    const char* title;
    double budget;
    std::function<Checks(const RunOptions&)> run;
};

const std::vector<CriterionDef>& criteria() {
    static const std::vector<CriterionDef> defs = {
        {"example 2 radial derivative alpha = -1", 1.0, criterion1},
        {"example 3 alpha = (1, -2, -2) at three boundary points", 1.0, criterion2},
        {"example 2 ellipsoid invariance and gamma", 10.0, criterion3},
        {"example 3 triple ellipsoid intersection", 10.0, criterion4},
        {"example 1 inequality (N), chi = 2 monotonicity and alpha", 10.0, criterion5},
        {"example 4 divergence and null point", 1.0, criterion6},
        {"example 5 exact power law", 1.0, criterion7},
        {"alpha = beta and gamma >= beta", 30.0, criterion8},
        {"identity suite", 10.0, criterion9},
        {"flow integrator fidelity", 20.0, criterion10},
        {"determinism of the suite report", 120.0, nullptr},
    };
    return defs;
}

std::vector<CriterionResult> run_range(int first, int last, const RunOptions& opts) {
    std::vector<CriterionResult> out;
    if (opts.parallel) {
        std::vector<std::future<CriterionResult>> jobs;
        for (int id = first; id <= last; ++id) {
            jobs.push_back(std::async(std::launch::async, [id, &opts] { return run_criterion(id, opts); }));
        }
        for (auto& j : jobs) {
            out.push_back(j.get());
        }
    } else {
        for (int id = first; id <= last; ++id) {
            out.push_back(run_criterion(id, opts));
        }
    }
    return out;
}

Checks criterion11(const RunOptions& o) {
    const auto first = run_range(1, kCriterionCount - 1, o);
    const auto second = run_range(1, kCriterionCount - 1, o);
    const bool same = acceptance_json(first, o).dump(2) == acceptance_json(second, o).dump(2);

    const AnalysisConfig cfg{.seed = o.seed, .tol_scale = o.tol_scale};
    const auto report = [&] {
        return to_json(analyze(builtin_generator(kEx2), builtin_semigroup(kEx2), e1(2), cfg)).dump(2);
    };
    const bool same_analysis = report() == report();
    return {flag_check("suite_report_identical", same, "criteria 1-10 run twice"),
            flag_check("analysis_report_identical", same_analysis, "example 2 analysis run twice")};
}

}  // namespace

void RunOptions::validate() const {
    if (!(tol_scale > 0.0) || !std::isfinite(tol_scale)) {
        throw UsageError("--tol-scale must be a positive number");
    }
}

bool SuiteReport::pass() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.failed(); }) &&
           std::all_of(analyses.begin(), analyses.end(), [](const AnalysisReport& a) { return a.pass(); });
}

nlohmann::json to_json(const SuiteReport& s, const RunOptions& opts) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : s.checks) {
        checks.push_back(to_json(c));
    }
    nlohmann::json analyses = nlohmann::json::array();
    for (const auto& a : s.analyses) {
        analyses.push_back(to_json(a));
    }
    return nlohmann::json{{"schema", kSuiteSchema},
                          {"version", kVersion},
                          {"suite", s.name},
                          {"seeds", {{"run", opts.seed}}},
                          {"tol_scale", opts.tol_scale},
                          {"checks", checks},
                          {"analyses", analyses},
                          {"pass", s.pass()}};
}

SuiteReport verify_example(int id, const RunOptions& opts) {
    opts.validate();
    if (id < 1 || id > 5) {
        throw UsageError("unknown example " + std::to_string(id) + " (expected 1..5)");
    }
    const double s = opts.tol_scale;
    AnalysisConfig cfg;
    cfg.seed = opts.seed;
    cfg.tol_scale = s;
    auto run = [&](const BuiltinSpec& spec, const BoundaryPoint& tau) {
        return analyze(builtin_generator(spec), builtin_semigroup(spec), tau, cfg);
    };
    auto append = [](Checks& to, Checks from) { to.insert(to.end(), from.begin(), from.end()); };

    SuiteReport rep;
    rep.name = "example" + std::to_string(id);
    Checks& c = rep.checks;
    switch (id) {
        case 1: {
            c.push_back(alpha_check("example1.alpha", kEx1, e1(1), 1.0, 1e-6 * s));
            append(c, criterion5(opts));
            const Semigroup sg2 = builtin_semigroup(kEx1Chi2);
            c.push_back(at_most("example1_chi2.nonexpansive", max_nonexpansive_defect(sg2, seed_for(opts, 11), 1000),
                                1e-10 * s, "max rho(F x, F y) - rho(x, y)"));
            c.push_back(at_most("example1_chi2.integrator", integrator_fidelity(kEx1Chi2, CVec({Complex(0.3, 0.4)})),
                                1e-6 * s));
            c.push_back(at_most("example1.semigroup_residual",
                                max_semigroup_residual(builtin_semigroup(kEx1), seed_for(opts, 12), 200), 1e-9 * s));
            rep.analyses.push_back(run(kEx1, e1(1)));
            rep.analyses.push_back(run(kEx1Chi2, e1(1)));
            break;
        }
        case 2: {
            append(c, criterion1(opts));
            append(c, criterion3(opts));
            const Generator g2 = builtin_generator(kEx2);
            double slice = 0.0;
            for (const Complex lambda : herglotz_lambda_samples(seed_for(opts, 21), 1000)) {
                slice = std::max(slice, std::abs(herglotz_ratio(g2, e1(2), -1.0, lambda) - 0.5));
            }
            c.push_back(at_most("example2.herglotz_slice", slice, 1e-10 * s));
            const Semigroup sg = builtin_semigroup(kEx2);
            c.push_back(at_most("example2.nonexpansive", max_nonexpansive_defect(sg, seed_for(opts, 22), 1000), 1e-10 * s));
            c.push_back(at_most("example2.semigroup_residual", max_semigroup_residual(sg, seed_for(opts, 23), 200), 1e-9 * s));
            c.push_back(at_most("example2.integrator", integrator_fidelity(kEx2, CVec({0.5, 0.1})), 1e-6 * s));
            rep.analyses.push_back(run(kEx2, e1(2)));
            break;
        }
        case 3: {
            append(c, criterion2(opts));
            append(c, criterion4(opts));
            const Semigroup sg = builtin_semigroup(kEx3);
            const auto samples = sample_flow_pairs(Sampler{seed_for(opts, 31), 1000, 0.3, 2}, ex3_tau(0), 1.0 - 1e-6, 5.0);
            c.push_back(make_check("example3.self_map", static_cast<double>(self_map_violations(sg, samples)),
                                   std::nullopt, 0.0, 0.0, "samples with ||F_t(z)|| >= 1"));
            c.push_back(at_most("example3.nonexpansive", max_nonexpansive_defect(sg, seed_for(opts, 32), 1000), 1e-10 * s));
            c.push_back(at_most("example3.semigroup_residual", max_semigroup_residual(sg, seed_for(opts, 33), 200), 1e-9 * s));
            c.push_back(at_most("example3.flow_at_zero_is_identity", max_identity_defect(sg, seed_for(opts, 34), 200),
                                1e-12 * s));
            for (int k = 0; k < 3; ++k) {
                rep.analyses.push_back(run(kEx3, ex3_tau(k)));
            }
            break;
        }
        case 4: {
            append(c, criterion6(opts));
            const Semigroup sg = builtin_semigroup(kEx4);
            c.push_back(at_most("example4.semigroup_residual",
                                semigroup_residual(sg, 0.5, 0.5, BallPoint(CVec({0.2}))), 1e-9 * s));
            c.push_back(at_most("example4.integrator", integrator_fidelity(kEx4, CVec({Complex(0.2, 0.3)})), 1e-6 * s));
            rep.analyses.push_back(run(kEx4, e1(1)));
            break;
        }
        case 5: {
            append(c, criterion7(opts));
            const Generator g5 = builtin_generator(kEx5);
            const BoundaryPoint minus_one(CVec({-1.0}));
            c.push_back(flag_check("example5.null_point_minus_one", check_null_point(g5, minus_one).ok));
            const GammaEstimate g = empirical_gamma(builtin_semigroup(kEx5), e1(1),
                                                    Sampler{seed_for(opts, 51), 1000, 0.3, 1}, default_t_grid());
            c.push_back(make_check("example5.gamma_unbounded", g.value, std::nullopt, -10.0, 0.0,
                                   "min sampled gamma; no finite lower bound"));
            c.push_back(at_most("example5.integrator", integrator_fidelity(kEx5, CVec({Complex(0.5, 0.2)})), 1e-6 * s));
            rep.analyses.push_back(run(kEx5, e1(1)));
            rep.analyses.push_back(run(kEx5, minus_one));
            break;
        }
    }
    return rep;
}

bool CriterionResult::checks_pass() const {
    return !checks.empty() && std::none_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.failed(); });
}

CriterionResult run_criterion(int id, const RunOptions& opts) {
    opts.validate();
    if (id < 1 || id > kCriterionCount) {
        throw UsageError("unknown criterion " + std::to_string(id));
    }
    const auto& def = criteria()[static_cast<std::size_t>(id - 1)];
    CriterionResult r;
    r.id = id;
    r.title = def.title;
    r.budget_seconds = def.budget;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        r.checks = id == kCriterionCount ? criterion11(opts) : def.run(opts);
    } catch (const std::exception& e) {
        r.checks = {make_check("exception", kNaN, std::nullopt, std::nullopt, 0.0, e.what())};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<CriterionResult> run_acceptance(const RunOptions& opts) {
    opts.validate();
    auto out = run_range(1, kCriterionCount - 1, opts);
    out.push_back(run_criterion(kCriterionCount, opts));
    return out;
}

nlohmann::json acceptance_json(std::span<const CriterionResult> results, const RunOptions& opts) {
    nlohmann::json list = nlohmann::json::array();
    bool all = true;
    for (const auto& r : results) {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& c : r.checks) {
            checks.push_back(to_json(c));
        }
        list.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.checks_pass()}, {"checks", checks}});
        all = all && r.checks_pass();
    }
    return nlohmann::json{{"schema", kAcceptanceSchema},
                          {"version", kVersion},
                          {"seeds", {{"run", opts.seed}}},
                          {"tol_scale", opts.tol_scale},
                          {"criteria", list},
                          {"pass", all}};
}

std::string criterion_line(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.pass() ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.title << " (";
    os.setf(std::ios::fixed);
    os.precision(3);
    os << r.seconds << " s, budget " << r.budget_seconds << " s)";
    if (!r.within_budget()) {
        os << " over budget";
    }
    for (const auto& c : r.checks) {
        if (c.failed()) {
            os << " first failure: " << c.name << " = " << format_real(c.value);
            if (!c.note.empty()) {
                os << " (" << c.note << ")";
            }
            break;
        }
    }
    return os.str();
}

}  // namespace hball
