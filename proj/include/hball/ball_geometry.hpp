#pragma once

// Hyperbolic geometry on the open unit ball of C^n: the metric, the
// horosphere-like distance d_tau to a boundary point, the ellipsoids
// E(tau, s) = { x : d_tau(x) < s } and their support functionals.

#include "hball/cvec.hpp"

namespace hball {

/// Points with ||x|| >= kBallMargin are rejected, so 1 - ||x||^2 stays
/// representable with some relative accuracy.
inline constexpr double kBallMargin = 1.0 - 1e-15;

/// Default tolerance on | ||tau|| - 1 | for boundary points.
inline constexpr double kUnitTolerance = 1e-12;

/// Above this norm d_tau switches to the logarithmic evaluation path.
inline constexpr double kLogPathNorm = 0.99;

/// A point of the open unit ball. Caches ||x|| and 1 - ||x||^2.
class BallPoint {
public:
    explicit BallPoint(CVec v);

    const CVec& vec() const noexcept { return v_; }
    std::size_t dim() const noexcept { return v_.dim(); }
    double norm() const noexcept { return norm_; }
    /// 1 - ||x||^2 computed as (1 - ||x||)(1 + ||x||).
    double one_minus_norm_sq() const noexcept { return gap_; }

    static bool admits(const CVec& v) noexcept;

private:
    CVec v_;
    double norm_;
    double gap_;
};

/// A unit vector tau on the sphere; renormalized on construction.
class BoundaryPoint {
public:
    explicit BoundaryPoint(const CVec& v, double unit_tol = kUnitTolerance);

    const CVec& vec() const noexcept { return v_; }
    std::size_t dim() const noexcept { return v_.dim(); }

private:
    CVec v_;
};

struct Ellipsoid {
    Ellipsoid(BoundaryPoint tau, double s);

    BoundaryPoint tau;
    double s;
};

/// sigma(x, y) = (1-||x||^2)(1-||y||^2) / |1-<x,y>|^2, in (0, 1].
double sigma(const BallPoint& x, const BallPoint& y);

/// Hyperbolic distance atanh(sqrt(1 - sigma)). Evaluated so that close points
/// keep relative accuracy and rho(x, x) == 0 exactly.
double rho(const BallPoint& x, const BallPoint& y);

/// d_tau(x) = |1 - <x,tau>|^2 / (1 - ||x||^2).
double d_tau(const BallPoint& x, const BoundaryPoint& tau);

/// The same quantity evaluated without the log-stable branch; kept for
/// cross-checking.
double d_tau_naive(const BallPoint& x, const BoundaryPoint& tau);

/// ln d_tau(x) = 2 ln|1 - <x,tau>| - ln(1 - ||x||^2).
double log_d_tau(const BallPoint& x, const BoundaryPoint& tau);

/// Strict membership d_tau(x) < s.
bool ellipsoid_contains(const Ellipsoid& e, const BallPoint& x);

/// x* = x / (1 - ||x||^2) - tau / (1 - <tau,x>), stored as a plain vector and
/// paired through inner(f, x*).
CVec support_functional(const BallPoint& x, const BoundaryPoint& tau);

}  // namespace hball
