#include "hball/ball_geometry.hpp"

#include <algorithm>
#include <cmath>

namespace hball {

BallPoint::BallPoint(CVec v) : v_(std::move(v)), norm_(v_.norm()), gap_((1.0 - norm_) * (1.0 + norm_)) {
    if (!(norm_ < kBallMargin)) {
        throw DomainError("point is not inside the open unit ball (||x|| = " + std::to_string(norm_) + ")");
    }
}

bool BallPoint::admits(const CVec& v) noexcept { return v.norm() < kBallMargin; }

BoundaryPoint::BoundaryPoint(const CVec& v, double unit_tol) : v_(v) {
    const double n = v.norm();
    if (!(std::abs(n - 1.0) <= unit_tol)) {
        throw DomainError("boundary point must have unit norm (||tau|| = " + std::to_string(n) + ")");
    }
    v_ = v / n;
}

Ellipsoid::Ellipsoid(BoundaryPoint tau_, double s_) : tau(std::move(tau_)), s(s_) {
    if (!(s > 0.0) || !std::isfinite(s)) {
        throw DomainError("ellipsoid level must be positive and finite");
    }
}

double sigma(const BallPoint& x, const BallPoint& y) {
    const double den = std::norm(1.0 - inner(x.vec(), y.vec()));
    return std::min(1.0, x.one_minus_norm_sq() * y.one_minus_norm_sq() / den);
}

double rho(const BallPoint& x, const BallPoint& y) {
    // |1-<x,y>|^2 sigma-complement numerator: ||x-y||^2 - (||x||^2||y||^2 - |<x,y>|^2).
    const CVec diff = y.vec() - x.vec();
    const double den = std::norm(1.0 - inner(x.vec(), y.vec()));
    const double num = std::max(0.0, diff.norm_squared() - gram_defect(x.vec(), diff));
    const double s = std::sqrt(std::min(1.0, num / den));
    if (s < 0.5) {
        return std::atanh(s);
    }
    // 1 - s = sigma / (1 + s), so atanh(s) = ln(1 + s) - ln(sigma) / 2.
    return std::log1p(s) - 0.5 * std::log(sigma(x, y));
}

double d_tau_naive(const BallPoint& x, const BoundaryPoint& tau) {
    require_same_dim(x.vec(), tau.vec());
    return std::norm(1.0 - inner(x.vec(), tau.vec())) / x.one_minus_norm_sq();
}

double log_d_tau(const BallPoint& x, const BoundaryPoint& tau) {
    require_same_dim(x.vec(), tau.vec());
    const double n = x.norm();
    const double log_gap = std::log1p(-n) + std::log1p(n);
    return 2.0 * std::log(std::abs(1.0 - inner(x.vec(), tau.vec()))) - log_gap;
}

double d_tau(const BallPoint& x, const BoundaryPoint& tau) {
    if (x.norm() > kLogPathNorm) {
        return std::exp(log_d_tau(x, tau));
    }
    return d_tau_naive(x, tau);
}

bool ellipsoid_contains(const Ellipsoid& e, const BallPoint& x) { return d_tau(x, e.tau) < e.s; }

CVec support_functional(const BallPoint& x, const BoundaryPoint& tau) {
    require_same_dim(x.vec(), tau.vec());
    const Complex w = 1.0 - inner(tau.vec(), x.vec());
    return x.vec() / x.one_minus_norm_sq() - tau.vec() / w;
}

}  // namespace hball
