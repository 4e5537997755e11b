#pragma once

#include "hball/generators.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace hball {

struct IntegratorConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double max_step = 0.25;
    /// Accepted states satisfy ||x|| <= 1 - ball_margin.
    double ball_margin = 1e-12;
    std::int64_t max_steps = 200000;

    /// Throws DomainError unless rel_tol, abs_tol lie in (0, 1e-3] and the
    /// remaining fields are positive.
    void validate() const;
};

class StepLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Step halving could not keep the state inside the ball (40 consecutive
/// halvings, or a step below 1e-13 max(1, t)). For a genuine generator the
/// flow never leaves B, so this flags a non-generator input.
class BallExit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TrajectorySample {
    double t;
    BallPoint x;
};

struct IntegratorDiagnostics {
    std::int64_t accepted_steps = 0;
    std::int64_t rejected_steps = 0;
    std::int64_t boundary_halvings = 0;
    std::int64_t evaluations = 0;
    /// min over accepted states of 1 - ||x||.
    double min_boundary_margin = 1.0;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    IntegratorDiagnostics diagnostics;

    const BallPoint& final_state() const { return samples.back().x; }
};

/// Solves dx/dt = -f(x), x(0) = x0 on [0, t_end] with the Dormand-Prince 5(4)
/// pair under PI step control. Records every accepted step.
Trajectory integrate_flow(const Generator& gen, const BallPoint& x0, double t_end,
                          const IntegratorConfig& cfg = {});

/// As above, but steps are clipped to land on each of `output_times` (sorted,
/// non-negative) and only those states are recorded, after the initial (0, x0).
Trajectory integrate_flow(const Generator& gen, const BallPoint& x0, std::span<const double> output_times,
                          const IntegratorConfig& cfg = {});

/// CSV with header `t,re_x1,im_x1,...` and an optional trailing `deviation`
/// column (one value per sample).
void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory,
                          std::optional<std::span<const double>> deviation = std::nullopt);

}  // namespace hball
