#pragma once

// Quantities behind the example-specific claims: invariant ellipsoids, the
// exact power law of Example 5, integrator fidelity and the pairing identity.

#include "hball/semigroup.hpp"
#include "hball/sampler.hpp"

#include <vector>

namespace hball {

struct FlowSample {
    BallPoint z;
    double t;
};

/// Sampled (z, t) pairs: z from sample_ball (so rays toward tau are covered),
/// t uniform in (0, t_max].
std::vector<FlowSample> sample_flow_pairs(const Sampler& sampler, const BoundaryPoint& tau, double max_norm,
                                          double t_max);

/// d_tau(F_t z) / (e^{-rate t} d_tau(z)) - 1, evaluated in log space.
/// Non-positive when F_t z stays in E(tau, e^{-rate t} d_tau(z)).
double ellipsoid_excess(const Semigroup& sg, const BoundaryPoint& tau, double rate, const BallPoint& z, double t);

/// Largest excess over the samples of the three Example 3 ellipsoids
/// E(tau1, e^{-t} d), E(tau2, e^{2t} d), E(tau3, e^{2t} d).
double triple_intersection_excess(const Semigroup& sg, std::span<const FlowSample> samples);

/// Number of samples with ||F_t(z)|| >= 1 - 1e-15.
std::size_t self_map_violations(const Semigroup& sg, std::span<const FlowSample> samples);

/// Example 5 on real x in (0, 1): |d1(F_t x) - d1(x)^{e^{-2t}}| / d1(x)^{e^{-2t}}.
double power_law_error(const Semigroup& sg, double x, double t);

/// d1(F_t x) / d1(x) for real x.
double d1_ratio(const Semigroup& sg, double x, double t);

/// max over t in {0, dt, ..., t_end} of ||x_num(t) - F_t(x0)||.
double integrator_deviation(const Generator& gen, const Semigroup& closed_form, const BallPoint& x0, double t_end,
                            double dt, const IntegratorConfig& cfg = {});

/// n = 1, tau = 1: |inner(f, (lambda)*) - f (conj(lambda)/(1-|lambda|^2) - 1/(1-lambda))|
/// relative to max(1, |lhs|).
double pairing_identity_residual(Complex f, Complex lambda);

}  // namespace hball
