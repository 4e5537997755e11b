#include "hball/integrator.hpp"

#include "hball/format.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace hball {

namespace {

// Dormand-Prince 5(4) tableau. The system is autonomous, so the nodes c_i are unused.
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

constexpr int kMaxConsecutiveHalvings = 40;
constexpr double kSafety = 0.9;
constexpr double kPiAlpha = 0.17;  // 1/5 - 0.75 * beta
constexpr double kPiBeta = 0.04;

using State = std::vector<Complex>;

class Stepper {
public:
    Stepper(const Generator& gen, const IntegratorConfig& cfg, IntegratorDiagnostics& diag)
        : gen_(gen), cfg_(cfg), diag_(diag) {}

    // -f(y); nullopt when y is not a ball point or f(y) is not finite.
    std::optional<State> rhs(const State& y) {
        for (const auto& z : y) {
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                return std::nullopt;
            }
        }
        CVec v(y);
        if (!BallPoint::admits(v)) {
            return std::nullopt;
        }
        ++diag_.evaluations;
        State out;
        try {
            const CVec f = gen_(BallPoint(std::move(v)));
            out.assign(f.entries().begin(), f.entries().end());
        } catch (const DomainError&) {
            return std::nullopt;
        }
        for (auto& z : out) {
            z = -z;
        }
        return out;
    }

    struct Attempt {
        bool inside = false;
        State y_new;
        State k7;
        double err = 0.0;
    };

    Attempt attempt(const State& y, const State& k1, double h) {
        Attempt a;
        const std::size_t n = y.size();
        auto combo = [&](std::initializer_list<std::pair<double, const State*>> terms) {
            State out = y;
            for (std::size_t i = 0; i < n; ++i) {
                Complex acc = 0.0;
                for (const auto& [c, k] : terms) {
                    acc += c * (*k)[i];
                }
                out[i] += h * acc;
            }
            return out;
        };
        auto k2 = rhs(combo({{a21, &k1}}));
        if (!k2) return a;
        auto k3 = rhs(combo({{a31, &k1}, {a32, &*k2}}));
        if (!k3) return a;
        auto k4 = rhs(combo({{a41, &k1}, {a42, &*k2}, {a43, &*k3}}));
        if (!k4) return a;
        auto k5 = rhs(combo({{a51, &k1}, {a52, &*k2}, {a53, &*k3}, {a54, &*k4}}));
        if (!k5) return a;
        auto k6 = rhs(combo({{a61, &k1}, {a62, &*k2}, {a63, &*k3}, {a64, &*k4}, {a65, &*k5}}));
        if (!k6) return a;
        State y_new = combo({{b1, &k1}, {b3, &*k3}, {b4, &*k4}, {b5, &*k5}, {b6, &*k6}});
        auto k7 = rhs(y_new);
        if (!k7 || CVec(y_new).norm() > 1.0 - cfg_.ball_margin) {
            return a;
        }

        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const Complex e = h * (e1 * k1[i] + e3 * (*k3)[i] + e4 * (*k4)[i] + e5 * (*k5)[i] + e6 * (*k6)[i] +
                                   e7 * (*k7)[i]);
            const double scale = cfg_.abs_tol + cfg_.rel_tol * std::max(std::abs(y[i]), std::abs(y_new[i]));
            sum += std::norm(e) / (scale * scale);
        }
        a.inside = true;
        a.err = std::sqrt(sum / static_cast<double>(n));
        a.y_new = std::move(y_new);
        a.k7 = std::move(*k7);
        return a;
    }

private:
    const Generator& gen_;
    const IntegratorConfig& cfg_;
    IntegratorDiagnostics& diag_;
};

Trajectory integrate_impl(const Generator& gen, const BallPoint& x0, std::span<const double> stops,
                          bool record_all, const IntegratorConfig& cfg) {
    cfg.validate();
    if (x0.dim() != gen.dim()) {
        throw DimensionMismatch(x0.dim(), gen.dim());
    }
    Trajectory traj;
    traj.samples.push_back({0.0, x0});
    auto& diag = traj.diagnostics;
    diag.min_boundary_margin = 1.0 - x0.norm();
    if (stops.empty()) {
        return traj;
    }

    Stepper stepper(gen, cfg, diag);
    State y(x0.vec().entries().begin(), x0.vec().entries().end());
    auto k1_first = stepper.rhs(y);
    if (!k1_first) {
        throw DomainError("generator is not finite at the initial point");
    }
    State k1 = std::move(*k1_first);
    double t = 0.0;
    double h = std::min({cfg.max_step, 1e-3, stops.back()});
    double err_prev = 1.0;
    int halvings = 0;
    std::int64_t attempts = 0;

    for (const double target : stops) {
        while (t < target) {
            if (++attempts > cfg.max_steps) {
                throw StepLimitExceeded("integrator exceeded " + std::to_string(cfg.max_steps) + " step attempts");
            }
            const double remaining = target - t;
            const bool lands = h >= remaining * (1.0 - 1e-12);
            const double h_try = lands ? remaining : h;

            auto a = stepper.attempt(y, k1, h_try);
            if (!a.inside) {
                ++diag.boundary_halvings;
                // A step this short no longer advances t: the solution is leaving the ball.
                if (++halvings >= kMaxConsecutiveHalvings || h_try <= 1e-13 * std::max(1.0, t)) {
                    throw BallExit("state cannot be kept inside the ball near t = " + format_real(t));
                }
                h = 0.5 * h_try;
                continue;
            }
            if (a.err > 1.0) {
                ++diag.rejected_steps;
                h = h_try * std::max(0.2, kSafety * std::pow(a.err, -0.2));
                continue;
            }

            halvings = 0;
            ++diag.accepted_steps;
            t = lands ? target : t + h_try;
            y = std::move(a.y_new);
            k1 = std::move(a.k7);
            const double err = std::max(a.err, 1e-10);
            const double fac = kSafety * std::pow(err, -kPiAlpha) * std::pow(err_prev, kPiBeta);
            err_prev = err;
            h = std::min(cfg.max_step, h_try * std::clamp(fac, 0.2, 5.0));

            BallPoint state{CVec(y)};
            diag.min_boundary_margin = std::min(diag.min_boundary_margin, 1.0 - state.norm());
            if (record_all || (lands && t == target)) {
                traj.samples.push_back({t, std::move(state)});
            }
        }
    }
    return traj;
}

}  // namespace

void IntegratorConfig::validate() const {
    if (!(rel_tol > 0.0 && rel_tol <= 1e-3) || !(abs_tol > 0.0 && abs_tol <= 1e-3)) {
        throw DomainError("integrator tolerances must lie in (0, 1e-3]");
    }
    if (!(max_step > 0.0) || !(ball_margin > 0.0 && ball_margin < 1.0) || max_steps <= 0) {
        throw DomainError("integrator max_step, ball_margin and max_steps must be positive");
    }
}

Trajectory integrate_flow(const Generator& gen, const BallPoint& x0, double t_end, const IntegratorConfig& cfg) {
    if (!(t_end >= 0.0) || !std::isfinite(t_end)) {
        throw DomainError("t_end must be a finite non-negative time");
    }
    if (t_end == 0.0) {
        return integrate_impl(gen, x0, {}, true, cfg);
    }
    const double stop[] = {t_end};
    return integrate_impl(gen, x0, stop, true, cfg);
}

Trajectory integrate_flow(const Generator& gen, const BallPoint& x0, std::span<const double> output_times,
                          const IntegratorConfig& cfg) {
    std::vector<double> stops;
    double last = 0.0;
    for (const double t : output_times) {
        if (!(t >= 0.0) || !std::isfinite(t)) {
            throw DomainError("output times must be finite and non-negative");
        }
        if (t == 0.0 && stops.empty()) {
            continue;
        }
        if (t <= last) {
            throw DomainError("output times must be strictly increasing");
        }
        stops.push_back(t);
        last = t;
    }
    return integrate_impl(gen, x0, stops, false, cfg);
}

void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory,
                          std::optional<std::span<const double>> deviation) {
    if (trajectory.samples.empty()) {
        return;
    }
    if (deviation && deviation->size() != trajectory.samples.size()) {
        throw DomainError("deviation column length must match the number of samples");
    }
    const std::size_t n = trajectory.samples.front().x.dim();
    out << "t";
    for (std::size_t i = 1; i <= n; ++i) {
        out << ",re_x" << i << ",im_x" << i;
    }
    if (deviation) {
        out << ",deviation";
    }
    out << '\n';
    for (std::size_t row = 0; row < trajectory.samples.size(); ++row) {
        const auto& s = trajectory.samples[row];
        out << format_real(s.t);
        for (const auto& z : s.x.vec().entries()) {
            out << ',' << format_real(z.real()) << ',' << format_real(z.imag());
        }
        if (deviation) {
            out << ',' << format_real((*deviation)[row]);
        }
        out << '\n';
    }
}

}  // namespace hball
