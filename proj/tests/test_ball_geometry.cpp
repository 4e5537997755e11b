#include "hball/ball_geometry.hpp"
#include "hball/sampler.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace hball;

namespace {

BallPoint pt(std::initializer_list<Complex> v) { return BallPoint(CVec(v)); }

// Disk distance from the Moebius pseudo-distance, independent of sigma.
double disk_rho(Complex x, Complex y) { return std::atanh(std::abs((x - y) / (1.0 - x * std::conj(y)))); }

}  // namespace

TEST(Rho, FromOriginAlongAxis) {
    const BallPoint o = pt({0.0, 0.0});
    const BallPoint x = pt({0.5, 0.0});
    EXPECT_NEAR(rho(o, x), std::atanh(0.5), 1e-15);
    EXPECT_EQ(rho(x, x), 0.0);
}

TEST(Rho, MatchesDiskFormulaInDimensionOne) {
    Rng rng(5);
    for (int k = 0; k < 1000; ++k) {
        const BallPoint x = random_ball_point(rng, 1, 0.999);
        const BallPoint y = random_ball_point(rng, 1, 0.999);
        const double expect = disk_rho(x.vec()[0], y.vec()[0]);
        EXPECT_NEAR(rho(x, y), expect, 1e-9 * std::max(1.0, expect));
    }
}

TEST(Rho, KeepsRelativeAccuracyForClosePoints) {
    const Complex a(0.3, 0.2);
    const Complex b = a + Complex(1e-12, 0);
    const double expect = (b - a).real() / (1.0 - std::norm(a));
    EXPECT_NEAR(rho(pt({a}), pt({b})), expect, 1e-6 * expect);
}

TEST(Rho, MetricAxioms) {
    Rng rng(17);
    for (std::size_t dim = 1; dim <= 4; ++dim) {
        for (int k = 0; k < 1000; ++k) {
            const BallPoint x = random_ball_point(rng, dim, 0.99);
            const BallPoint y = random_ball_point(rng, dim, 0.99);
            const BallPoint z = random_ball_point(rng, dim, 0.99);
            EXPECT_GT(rho(x, y), 0.0);
            EXPECT_EQ(rho(x, x), 0.0);
            EXPECT_NEAR(rho(x, y), rho(y, x), 1e-12);
            EXPECT_LE(rho(x, z), rho(x, y) + rho(y, z) + 1e-10);
            const double s = sigma(x, y);
            EXPECT_GT(s, 0.0);
            EXPECT_LE(s, 1.0);
        }
    }
}

TEST(Rho, InvariantUnderUnitaryRotation) {
    Rng rng(23);
    for (int k = 0; k < 100; ++k) {
        const BallPoint x = random_ball_point(rng, 2, 0.95);
        const BallPoint y = random_ball_point(rng, 2, 0.95);
        // (z1, z2) -> (i z2, z1) is unitary
        auto rot = [](const BallPoint& p) { return BallPoint(CVec({Complex(0, 1) * p.vec()[1], p.vec()[0]})); };
        EXPECT_NEAR(rho(rot(x), rot(y)), rho(x, y), 1e-11);
    }
}

TEST(DTau, KnownValues) {
    const BoundaryPoint tau(CVec({1.0, 0.0}));
    EXPECT_NEAR(d_tau(pt({0.9, 0.0}), tau), 1.0 / 19.0, 1e-15);
    EXPECT_EQ(d_tau(pt({0.0, 0.0}), tau), 1.0);
    // |1 - 0.5i * conj(i)|^2 / (1 - 0.25) with tau = (i, 0): |1 - 0.5|^2 / 0.75
    const BoundaryPoint ti(CVec({Complex(0, 1), 0.0}));
    EXPECT_NEAR(d_tau(pt({Complex(0, 0.5), 0.0}), ti), 0.25 / 0.75, 1e-15);
}

TEST(DTau, LogPathAgreesWithNaive) {
    Rng rng(29);
    const BoundaryPoint tau(CVec({Complex(0.6, 0), Complex(0, 0.8)}));
    for (int k = 0; k < 1000; ++k) {
        const BallPoint x = random_ball_point(rng, 2, 0.999);
        const double naive = d_tau_naive(x, tau);
        EXPECT_NEAR(d_tau(x, tau), naive, 1e-10 * naive);
        EXPECT_NEAR(std::exp(log_d_tau(x, tau)), naive, 1e-10 * naive);
    }
    // radial points past the log-path switch
    for (double r : {0.995, 0.9999, 1.0 - 1e-8}) {
        const BallPoint x(r * tau.vec());
        EXPECT_NEAR(d_tau(x, tau), (1.0 - r) / (1.0 + r), 1e-7 * (1.0 - r));
    }
}

TEST(DTau, TangentAtTau) {
    // r tau is rounded componentwise for this tau, which costs ~eps in
    // 1 - ||x||; hence the absolute slack.
    const BoundaryPoint tau(CVec({Complex(0, 0.6), Complex(0.8, 0)}));
    const BoundaryPoint e(CVec({1.0, 0.0}));
    double prev = 2.0;
    for (int k = 1; k <= 40; ++k) {
        const double r = 1.0 - std::ldexp(1.0, -k);
        const double want = (1.0 - r) / (1.0 + r);
        const double d = d_tau(BallPoint(r * tau.vec()), tau);
        EXPECT_NEAR(d, want, 1e-9 * want + 4e-16);
        EXPECT_NEAR(d_tau(BallPoint(r * e.vec()), e), want, 1e-14 * want);
        EXPECT_LT(d, prev);
        prev = d;
    }
}

TEST(BallPoint, RejectsBoundaryAndOutside) {
    EXPECT_THROW(pt({1.0}), DomainError);
    EXPECT_THROW(pt({0.8, 0.6}), DomainError);
    EXPECT_NO_THROW(pt({1.0 - 1e-14}));
    EXPECT_FALSE(BallPoint::admits(CVec({Complex(0.6, 0.8)})));
    EXPECT_TRUE(BallPoint::admits(CVec({Complex(0.6, 0.79)})));
    const BallPoint x = pt({1.0 - 1e-10});
    EXPECT_NEAR(x.one_minus_norm_sq(), (1.0 - x.norm()) * (1.0 + x.norm()), 1e-25);
    EXPECT_NEAR(x.one_minus_norm_sq(), 2e-10, 1e-15);
}

TEST(BoundaryPoint, RenormalizesAndRejectsOffSphere) {
    const BoundaryPoint t(CVec({0.6, 0.8 + 1e-13}));
    EXPECT_NEAR(t.vec().norm(), 1.0, 1e-16);
    EXPECT_THROW(BoundaryPoint(CVec({0.5, 0.0})), DomainError);
    EXPECT_THROW(BoundaryPoint(CVec({0.6, 0.8 + 1e-9})), DomainError);
}

TEST(Ellipsoid, StrictMembership) {
    const BoundaryPoint tau(CVec({1.0}));
    const BallPoint o = pt({0.0});
    EXPECT_FALSE(ellipsoid_contains(Ellipsoid(tau, 1.0), o));
    EXPECT_TRUE(ellipsoid_contains(Ellipsoid(tau, 1.0 + 1e-9), o));
    EXPECT_TRUE(ellipsoid_contains(Ellipsoid(tau, 0.06), pt({0.9})));
    EXPECT_FALSE(ellipsoid_contains(Ellipsoid(tau, 0.05), pt({0.9})));
    EXPECT_THROW(Ellipsoid(tau, 0.0), DomainError);
    EXPECT_THROW(Ellipsoid(tau, -1.0), DomainError);
}

// The directional derivative of ln d_tau along v is 2 Re <v, x*>.
TEST(SupportFunctional, IsGradientOfLogDTau) {
    Rng rng(31);
    const BoundaryPoint tau(CVec({Complex(0, 1), 0.0}));
    for (int k = 0; k < 100; ++k) {
        const BallPoint x = random_ball_point(rng, 2, 0.9);
        const CVec v = random_unit_vector(rng, 2);
        const double h = 1e-5;
        const double fd = (log_d_tau(BallPoint(x.vec() + h * v), tau) - log_d_tau(BallPoint(x.vec() - h * v), tau)) /
                          (2 * h);
        const double exact = 2.0 * inner(v, support_functional(x, tau)).real();
        EXPECT_NEAR(fd, exact, 1e-7 * std::max(1.0, std::abs(exact)));
    }
}

// On the disk with tau = 1, <f, x*> at x = lambda equals
// f (conj(lambda) / (1 - |lambda|^2) - 1 / (1 - lambda)).
TEST(SupportFunctional, DiskPairing) {
    Rng rng(37);
    const BoundaryPoint tau(CVec({1.0}));
    for (int k = 0; k < 200; ++k) {
        const Complex lambda = random_ball_point(rng, 1, 0.999).vec()[0];
        const Complex f(rng.uniform(-2, 2), rng.uniform(-2, 2));
        const Complex got = inner(CVec({f}), support_functional(BallPoint(CVec({lambda})), tau));
        const Complex expect = f * (std::conj(lambda) / (1.0 - std::norm(lambda)) - 1.0 / (1.0 - lambda));
        EXPECT_LT(std::abs(got - expect), 1e-12 * std::max(1.0, std::abs(expect)));
    }
}
