#include "hball/integrator.hpp"
#include "hball/sampler.hpp"
#include "hball/semigroup.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

using namespace hball;

namespace {

BuiltinSpec spec(BuiltinKind kind, std::size_t dim = 1, double chi = 1.0) {
    BuiltinSpec s;
    s.kind = kind;
    s.dim = dim;
    s.chi = chi;
    return s;
}

}  // namespace

TEST(Integrator, Example1AgainstClosedForm) {
    const auto gen = builtin_generator(spec(BuiltinKind::Example1, 1, 2.0));
    const Complex z(0.3, 0.4);
    const auto traj = integrate_flow(gen, BallPoint(CVec({z})), 2.0);
    const Complex x = traj.final_state().vec()[0];
    const Complex want(1.0 - std::exp(-2.0) + std::exp(-2.0) * 0.3, std::exp(-4.0) * 0.4);
    EXPECT_LT(std::abs(x - want), 1e-6);
    EXPECT_DOUBLE_EQ(traj.samples.back().t, 2.0);
    EXPECT_GT(traj.diagnostics.accepted_steps, 0);
}

TEST(Integrator, Example2AgainstClosedForm) {
    const auto gen = builtin_generator(spec(BuiltinKind::Example2, 2));
    const double t = 3.0;
    const auto traj = integrate_flow(gen, BallPoint(CVec({0.5, 0.1})), t);
    const double den = 0.5 + std::exp(t) * 0.5;
    const CVec want({0.5 / den, std::exp(t / 2) * 0.1 / den});
    EXPECT_LT(distance(traj.final_state().vec(), want), 1e-6);
}

TEST(Integrator, OutputTimesAreHit) {
    const auto gen = builtin_generator(spec(BuiltinKind::Example5));
    const double times[] = {0.25, 0.5, 1.0, 2.0};
    const auto traj = integrate_flow(gen, BallPoint(CVec({0.4})), times);
    ASSERT_EQ(traj.samples.size(), 5u);
    EXPECT_EQ(traj.samples[0].t, 0.0);
    const auto sg = builtin_semigroup(spec(BuiltinKind::Example5));
    for (std::size_t k = 1; k < traj.samples.size(); ++k) {
        EXPECT_EQ(traj.samples[k].t, times[k - 1]);
        EXPECT_LT(distance(traj.samples[k].x.vec(), sg.evaluate(times[k - 1], BallPoint(CVec({0.4})))), 1e-8);
    }
}

// sup over a t-grid on [0, 5] of the distance to the closed-form flow.
TEST(Integrator, FidelityOverTimeGrid) {
    const BuiltinSpec specs[] = {spec(BuiltinKind::Example1, 1, 1.0), spec(BuiltinKind::Example1, 1, 2.0),
                                 spec(BuiltinKind::Example2, 2), spec(BuiltinKind::Example4),
                                 spec(BuiltinKind::Example5)};
    std::vector<double> times;
    for (int k = 1; k <= 50; ++k) {
        times.push_back(0.1 * k);
    }
    Rng rng(77);
    IntegratorConfig cfg;
    const double tol = std::max(10 * cfg.rel_tol, 1e-6);
    for (const auto& s : specs) {
        const auto gen = builtin_generator(s);
        const auto sg = builtin_semigroup(s);
        for (int k = 0; k < 10; ++k) {
            const BallPoint x0 = random_ball_point(rng, s.dim, 0.99);
            const auto traj = integrate_flow(gen, x0, times, cfg);
            EXPECT_GT(traj.diagnostics.min_boundary_margin, 0.0);
            for (const auto& smp : traj.samples) {
                EXPECT_LT(distance(smp.x.vec(), sg.evaluate(smp.t, x0)), tol) << gen.name() << " t=" << smp.t;
            }
        }
    }
}

TEST(Integrator, ZeroGeneratorIsStationary) {
    const auto gen = builtin_generator(spec(BuiltinKind::Zero, 2));
    const BallPoint x0(CVec({Complex(0.1, 0.2), Complex(-0.3, 0.0)}));
    const auto traj = integrate_flow(gen, x0, 10.0);
    for (const auto& s : traj.samples) {
        EXPECT_EQ(s.x.vec(), x0.vec());
    }
}

TEST(Integrator, NonGeneratorLeavesBall) {
    // chi < 1: the imaginary part decays too slowly while Re z -> 1.
    const auto gen = builtin_generator(spec(BuiltinKind::Example1, 1, 0.4));
    const BallPoint x0(CVec({Complex(0.79999, 0.59999)}));
    EXPECT_THROW(integrate_flow(gen, x0, 5.0), BallExit);
}

TEST(Integrator, StepLimit) {
    const auto gen = builtin_generator(spec(BuiltinKind::Example5));
    IntegratorConfig cfg;
    cfg.max_steps = 3;
    cfg.max_step = 0.01;
    EXPECT_THROW(integrate_flow(gen, BallPoint(CVec({0.5})), 1.0, cfg), StepLimitExceeded);
}

TEST(Integrator, ConfigValidation) {
    IntegratorConfig cfg;
    EXPECT_NO_THROW(cfg.validate());
    cfg.rel_tol = 1e-2;
    EXPECT_THROW(cfg.validate(), DomainError);
    cfg = {};
    cfg.abs_tol = 0.0;
    EXPECT_THROW(cfg.validate(), DomainError);
    cfg = {};
    cfg.max_steps = 0;
    EXPECT_THROW(cfg.validate(), DomainError);
}

TEST(Integrator, CsvLayout) {
    const auto gen = builtin_generator(spec(BuiltinKind::Example2, 2));
    const double times[] = {1.0};
    const auto traj = integrate_flow(gen, BallPoint(CVec({0.5, 0.1})), times);
    std::ostringstream plain;
    write_trajectory_csv(plain, traj);
    std::string header;
    std::istringstream in(plain.str());
    std::getline(in, header);
    EXPECT_EQ(header, "t,re_x1,im_x1,re_x2,im_x2");
    const double dev[] = {0.0, 1e-9};
    std::ostringstream with;
    write_trajectory_csv(with, traj, std::span<const double>(dev));
    EXPECT_EQ(with.str().substr(0, with.str().find('\n')), "t,re_x1,im_x1,re_x2,im_x2,deviation");
}
