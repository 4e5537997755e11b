#include "hball/claims.hpp"

#include <algorithm>
#include <cmath>

namespace hball {

std::vector<FlowSample> sample_flow_pairs(const Sampler& sampler, const BoundaryPoint& tau, double max_norm,
                                          double t_max) {
    if (!(t_max > 0.0 && t_max <= kMaxFlowTime)) {
        throw DomainError("t_max must lie in (0, 50]");
    }
    const auto points = sample_ball(sampler, tau, max_norm);
    Rng rng(sampler.seed ^ 0x5DEECE66DULL);
    std::vector<FlowSample> out;
    out.reserve(points.size());
    for (const auto& z : points) {
        out.push_back({z, t_max * (1.0 - rng.uniform())});
    }
    return out;
}

double ellipsoid_excess(const Semigroup& sg, const BoundaryPoint& tau, double rate, const BallPoint& z, double t) {
    return std::expm1(log_d_tau(sg.apply(t, z), tau) - log_d_tau(z, tau) + rate * t);
}

double triple_intersection_excess(const Semigroup& sg, std::span<const FlowSample> samples) {
    const BoundaryPoint taus[3] = {BoundaryPoint(CVec::unit(2, 0)), BoundaryPoint(CVec({Complex(0, 1), 0.0})),
                                   BoundaryPoint(CVec({Complex(0, -1), 0.0}))};
    const double rates[3] = {1.0, -2.0, -2.0};
    double worst = -1.0;
    for (const auto& s : samples) {
        for (int k = 0; k < 3; ++k) {
            worst = std::max(worst, ellipsoid_excess(sg, taus[k], rates[k], s.z, s.t));
        }
    }
    return worst;
}

std::size_t self_map_violations(const Semigroup& sg, std::span<const FlowSample> samples) {
    return static_cast<std::size_t>(std::count_if(samples.begin(), samples.end(), [&](const FlowSample& s) {
        return !BallPoint::admits(sg.evaluate(s.t, s.z));
    }));
}

namespace {

double d1_real(double x) { return (1.0 - x) / (1.0 + x); }

double real_flow(const Semigroup& sg, double x, double t) {
    if (!(x > 0.0 && x < 1.0)) {
        throw DomainError("x must lie in (0, 1)");
    }
    return sg.evaluate(t, BallPoint(CVec({x})))[0].real();
}

}  // namespace

double power_law_error(const Semigroup& sg, double x, double t) {
    const double expected = std::pow(d1_real(x), std::exp(-2.0 * t));
    return std::abs(d1_real(real_flow(sg, x, t)) - expected) / expected;
}

double d1_ratio(const Semigroup& sg, double x, double t) { return d1_real(real_flow(sg, x, t)) / d1_real(x); }

double integrator_deviation(const Generator& gen, const Semigroup& closed_form, const BallPoint& x0, double t_end,
                            double dt, const IntegratorConfig& cfg) {
    if (!(dt > 0.0 && t_end >= dt)) {
        throw DomainError("need 0 < dt <= t_end");
    }
    std::vector<double> times;
    for (int k = 1; k * dt <= t_end * (1.0 + 1e-12); ++k) {
        times.push_back(k * dt);
    }
    const Trajectory traj = integrate_flow(gen, x0, times, cfg);
    double worst = 0.0;
    for (const auto& s : traj.samples) {
        worst = std::max(worst, distance(s.x.vec(), closed_form.evaluate(s.t, x0)));
    }
    return worst;
}

double pairing_identity_residual(Complex f, Complex lambda) {
    const BallPoint x(CVec({lambda}));
    const BoundaryPoint tau(CVec({1.0}));
    const Complex lhs = inner(CVec({f}), support_functional(x, tau));
    const Complex rhs = f * (std::conj(lambda) / (1.0 - std::norm(lambda)) - 1.0 / (1.0 - lambda));
    return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
}

}  // namespace hball
