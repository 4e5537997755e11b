#include "hball/boundary_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace hball {

namespace {

BallPoint radial_point(const BoundaryPoint& tau, double r) { return BallPoint(Complex(r) * tau.vec()); }

// <f(r tau), tau> / (r - 1)
Complex radial_quotient(const Generator& gen, const BoundaryPoint& tau, double r) {
    return inner(gen(radial_point(tau, r)), tau.vec()) / (r - 1.0);
}

void require_holomorphic(const Generator& gen, const char* what) {
    if (!gen.is_holomorphic()) {
        throw DomainError(std::string(what) + " applies to holomorphic generators only");
    }
}

// Compass search on R^{2n}, plus the radial direction, confined to the ball of
// radius max_norm by projection.
class CompassSearch {
public:
    CompassSearch(const Generator& gen, const BoundaryPoint& tau, double max_norm, std::size_t budget)
        : gen_(gen), tau_(tau), max_norm_(max_norm), budget_(budget) {}

    std::size_t evaluations() const noexcept { return evaluations_; }

    std::pair<double, CVec> polish(CVec x, double fx) {
        double step = std::min(0.05, 0.5 * (1.0 - x.norm()) + 1e-7);
        std::size_t used = 0;
        const std::size_t n = x.dim();
        while (step > 1e-12 && used < budget_) {
            bool improved = false;
            for (std::size_t k = 0; k < 2 * n + 1 && !improved; ++k) {
                for (const double sign : {1.0, -1.0}) {
                    CVec dir = direction(x, k, n);
                    CVec y = project(x + Complex(sign * step) * dir);
                    ++used;
                    const auto fy = value(y);
                    if (fy && *fy < fx) {
                        x = std::move(y);
                        fx = *fy;
                        improved = true;
                        break;
                    }
                }
            }
            if (!improved) {
                step *= 0.5;
            } else if (1.0 - x.norm() < step) {
                step = std::max(0.5 * (1.0 - x.norm()), 1e-12);
            }
        }
        return {fx, std::move(x)};
    }

    std::optional<double> value(const CVec& v) {
        if (!BallPoint::admits(v)) {
            return std::nullopt;
        }
        ++evaluations_;
        double val = 0.0;
        try {
            val = support_pairing(gen_, BallPoint(v), tau_);
        } catch (const DomainError&) {
            return std::nullopt;
        }
        if (!std::isfinite(val)) {
            return std::nullopt;
        }
        return val;
    }

private:
    static CVec direction(const CVec& x, std::size_t k, std::size_t n) {
        if (k == 2 * n) {
            const double nx = x.norm();
            return nx > 0.0 ? x / nx : CVec::unit(n, 0);
        }
        auto e = std::vector<Complex>(n);
        e[k / 2] = (k % 2 == 0) ? Complex(1.0, 0.0) : Complex(0.0, 1.0);
        return CVec(std::move(e));
    }

    CVec project(CVec v) const {
        const double nv = v.norm();
        if (nv > max_norm_) {
            return Complex(max_norm_ / nv) * v;
        }
        return v;
    }

    const Generator& gen_;
    const BoundaryPoint& tau_;
    double max_norm_;
    std::size_t budget_;
    std::size_t evaluations_ = 0;
};

}  // namespace

std::vector<double> geometric_schedule(int k_min, int k_max) {
    std::vector<double> out;
    for (int k = k_min; k <= k_max; ++k) {
        out.push_back(1.0 - std::ldexp(1.0, -k));
    }
    return out;
}

std::vector<double> default_radial_schedule() { return geometric_schedule(3, 30); }

std::vector<double> default_null_schedule() { return geometric_schedule(3, 48); }

std::vector<double> default_t_grid() { return {0.1, 0.5, 1.0, 2.0, 5.0}; }

std::string to_string(RadialVerdict v) {
    switch (v) {
        case RadialVerdict::Converged: return "Converged";
        case RadialVerdict::Diverged: return "Diverged";
        case RadialVerdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

RadialProfile radial_profile(const Generator& gen, const BoundaryPoint& tau, std::span<const double> schedule) {
    RadialProfile prof;
    for (const double r : schedule) {
        if (!prof.points.empty() && !(r > prof.points.back().r)) {
            throw DomainError("radial schedule must be strictly increasing");
        }
        if (!(r > 0.0 && r < 1.0)) {
            throw DomainError("radial schedule entries must lie in (0, 1)");
        }
        try {
            const Complex q = radial_quotient(gen, tau, r);
            if (!std::isfinite(q.real()) || !std::isfinite(q.imag())) {
                prof.failure = "non-finite quotient at r = " + std::to_string(r);
                break;
            }
            prof.points.push_back({r, q.real(), q.imag()});
        } catch (const std::exception& e) {
            prof.failure = std::string("evaluation failed at r = ") + std::to_string(r) + ": " + e.what();
            break;
        }
    }

    const auto& p = prof.points;
    const std::size_t m = p.size();
    if (m >= 6) {
        bool converged = true;
        for (std::size_t i = m - 5; i < m; ++i) {
            converged = converged && std::abs(p[i].q - p[i - 1].q) < kConvergenceTol;
        }
        if (converged) {
            // First-order error in (1 - r): eliminate it between the last two radii.
            const double ratio = (1.0 - p[m - 2].r) / (1.0 - p[m - 1].r);
            prof.limit = (ratio * p[m - 1].q - p[m - 2].q) / (ratio - 1.0);
            prof.verdict = RadialVerdict::Converged;
            return prof;
        }
    }
    if (m >= 2 && std::abs(p[m - 1].q) > kDivergenceThreshold) {
        // |q| must increase monotonically from the first index past the threshold onward.
        std::size_t first = m - 1;
        while (first > 0 && std::abs(p[first - 1].q) > kDivergenceThreshold) {
            --first;
        }
        bool monotone = true;
        const int sign = p[m - 1].q > 0 ? 1 : -1;
        for (std::size_t i = (first > 0 ? first : 1); i < m; ++i) {
            monotone = monotone && std::abs(p[i].q) > std::abs(p[i - 1].q) && (p[i].q > 0 ? 1 : -1) == sign;
        }
        if (monotone) {
            prof.verdict = RadialVerdict::Diverged;
            prof.divergence_sign = sign;
        }
    }
    return prof;
}

NullPointResult check_null_point(const Generator& gen, const BoundaryPoint& tau, std::span<const double> schedule) {
    NullPointResult res;
    for (const double r : schedule) {
        try {
            res.norms.emplace_back(r, gen(radial_point(tau, r)).norm());
        } catch (const std::exception&) {
            break;
        }
    }
    if (!res.norms.empty()) {
        res.final_norm = res.norms.back().second;
        res.ok = res.norms.size() == schedule.size() && res.final_norm < kNullTol;
    }
    return res;
}

double monotonicity_defect(const Generator& gen, const BallPoint& x, const BallPoint& y) {
    const CVec fx = gen(x);
    const CVec fy = gen(y);
    const Complex lhs = inner(fx, x.vec()) / x.one_minus_norm_sq() + inner(y.vec(), fy) / y.one_minus_norm_sq();
    const Complex rhs = (inner(fx, y.vec()) + inner(x.vec(), fy)) / (1.0 - inner(x.vec(), y.vec()));
    return lhs.real() - rhs.real();
}

double support_pairing(const Generator& gen, const BallPoint& x, const BoundaryPoint& tau) {
    return 2.0 * inner(gen(x), support_functional(x, tau)).real();
}

double radial_monotonicity_gap(const Generator& gen, const BallPoint& x, const BoundaryPoint& tau, double r) {
    const CVec& t = tau.vec();
    const BallPoint y = radial_point(tau, r);
    const CVec lhs_vec = x.vec() / x.one_minus_norm_sq() - Complex(r) * t / (1.0 - r * inner(t, x.vec()));
    const CVec rhs_vec = x.vec() / (1.0 - r * inner(x.vec(), t)) - Complex(r / ((1.0 - r) * (1.0 + r))) * t;
    return inner(gen(x), lhs_vec).real() - inner(gen(y), rhs_vec).real();
}

double radial_pairing_residual(const Generator& gen, const BoundaryPoint& tau, double r) {
    const BallPoint x = radial_point(tau, r);
    const double lhs = support_pairing(gen, x, tau);
    const double rhs = radial_quotient(gen, tau, r).real() * 2.0 / (r + 1.0);
    return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

BetaEstimate estimate_beta(const Generator& gen, const BoundaryPoint& tau, const Sampler& sampler, double max_norm) {
    const auto points = sample_ball(sampler, tau, max_norm);
    CompassSearch search(gen, tau, max_norm, 4000);

    std::vector<std::pair<double, std::size_t>> scored;
    scored.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (const auto v = search.value(points[i].vec())) {
            scored.emplace_back(*v, i);
        }
    }
    if (scored.empty()) {
        throw DomainError("support pairing could not be evaluated at any sample");
    }
    const std::size_t n_best = std::min<std::size_t>(10, scored.size());
    std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(n_best), scored.end());

    BetaEstimate est;
    est.value = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n_best; ++j) {
        auto [val, x] = search.polish(points[scored[j].second].vec(), scored[j].first);
        if (val < est.value) {
            est.value = val;
            est.argmin = std::move(x);
        }
    }

    const double shell = 1.0 - max_norm;
    const double nx = est.argmin.norm();
    est.on_boundary_shell = 1.0 - nx <= 10.0 * shell;
    if (nx > 0.0) {
        const CVec dir = est.argmin / nx;
        const auto inner_val = search.value(Complex(std::min(1.0 - 1e-4, max_norm)) * dir);
        const auto outer_val = search.value(Complex(max_norm) * dir);
        if (inner_val && outer_val) {
            est.suspect_unbounded = *outer_val < *inner_val - 1e-3 * std::max(1.0, std::abs(*inner_val));
        }
    }
    est.evaluations = search.evaluations();
    return est;
}

double gamma_sample(const Semigroup& sg, const BoundaryPoint& tau, const BallPoint& x, double t) {
    if (!(t > 0.0)) {
        throw DomainError("gamma needs t > 0");
    }
    return (log_d_tau(x, tau) - log_d_tau(sg.apply(t, x), tau)) / t;
}

GammaEstimate empirical_gamma(const Semigroup& sg, const BoundaryPoint& tau, const Sampler& sampler,
                              std::span<const double> t_grid, double max_norm) {
    const auto points = sample_ball(sampler, tau, max_norm);
    GammaEstimate est;
    est.value = std::numeric_limits<double>::infinity();
    for (const auto& x : points) {
        for (const double t : t_grid) {
            double g = 0.0;
            try {
                g = gamma_sample(sg, tau, x, t);
            } catch (const std::exception&) {
                ++est.skipped;
                continue;
            }
            if (!std::isfinite(g)) {
                ++est.skipped;
                continue;
            }
            ++est.samples;
            if (g < est.value) {
                est.value = g;
                est.argmin_x = x.vec();
                est.argmin_t = t;
            }
        }
    }
    return est;
}

double psi_derivative_identity(const Generator& gen, const Semigroup& sg, const BallPoint& x,
                               const BoundaryPoint& tau, double h) {
    if (!(h > 0.0 && h <= 1e-4)) {
        throw DomainError("psi step must lie in (0, 1e-4]");
    }
    // One-sided fourth-order stencil: F_t is only defined for t >= 0.
    double psi[5];
    psi[0] = d_tau(x, tau);
    for (int k = 1; k < 5; ++k) {
        psi[k] = d_tau(sg.apply(k * h, x), tau);
    }
    const double dpsi = (-25.0 * psi[0] + 48.0 * psi[1] - 36.0 * psi[2] + 16.0 * psi[3] - 3.0 * psi[4]) / (12.0 * h);
    const double predicted = -psi[0] * support_pairing(gen, x, tau);
    return std::abs(dpsi - predicted);
}

std::vector<Complex> herglotz_lambda_samples(std::uint64_t seed, std::size_t count) {
    Rng rng(seed);
    std::vector<Complex> out;
    out.reserve(count);
    while (out.size() < count) {
        const double r = (1.0 - 1e-9) * std::sqrt(rng.uniform());
        const double a = rng.uniform(-std::numbers::pi, std::numbers::pi);
        const Complex lambda = std::polar(r, a);
        if (std::abs(1.0 - lambda) >= 1e-3) {
            out.push_back(lambda);
        }
    }
    return out;
}

double herglotz_ratio(const Generator& gen, const BoundaryPoint& tau, double beta, Complex lambda) {
    const BallPoint x(lambda * tau.vec());
    const Complex g = inner(gen(x), tau.vec()) - 0.5 * beta * (lambda * lambda - 1.0);
    const Complex one_minus = 1.0 - lambda;
    return (g / -(one_minus * one_minus)).real();
}

double herglotz_positivity(const Generator& gen, const BoundaryPoint& tau, double beta,
                           std::span<const Complex> lambdas) {
    require_holomorphic(gen, "herglotz_positivity");
    double worst = std::numeric_limits<double>::infinity();
    for (const Complex lambda : lambdas) {
        worst = std::min(worst, herglotz_ratio(gen, tau, beta, lambda));
    }
    return worst;
}

double holomorphic_real_limit_check(const Generator& gen, const BoundaryPoint& tau, std::span<const double> schedule) {
    require_holomorphic(gen, "holomorphic_real_limit_check");
    const std::size_t tail = std::min<std::size_t>(5, schedule.size());
    double worst = 0.0;
    for (std::size_t i = schedule.size() - tail; i < schedule.size(); ++i) {
        worst = std::max(worst, std::abs(radial_quotient(gen, tau, schedule[i]).imag()));
    }
    return worst;
}

}  // namespace hball
