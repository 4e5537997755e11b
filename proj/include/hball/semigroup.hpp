#pragma once

#include "hball/integrator.hpp"

#include <functional>
#include <variant>

namespace hball {

/// Largest flow time accepted by Semigroup; keeps e^t terms finite.
inline constexpr double kMaxFlowTime = 50.0;

/// One-parameter semigroup {F_t}, either in closed form or backed by the
/// integrator applied to a generator.
class Semigroup {
public:
    using Map = std::function<CVec(double t, const BallPoint& x)>;

    struct ClosedForm {
        Map map;
    };
    struct Integrated {
        Generator gen;
        IntegratorConfig cfg;
    };

    static Semigroup closed_form(std::string name, std::size_t dim, Map map);
    static Semigroup integrated(Generator gen, IntegratorConfig cfg = {});

    /// F_t(x) without checking that the result lies in the ball.
    CVec evaluate(double t, const BallPoint& x) const;
    /// F_t(x) as a BallPoint; throws DomainError if it left the ball.
    BallPoint apply(double t, const BallPoint& x) const;

    const std::string& name() const noexcept { return name_; }
    std::size_t dim() const noexcept { return dim_; }
    bool is_closed_form() const noexcept { return std::holds_alternative<ClosedForm>(kind_); }

private:
    Semigroup(std::string name, std::size_t dim, std::variant<ClosedForm, Integrated> kind)
        : name_(std::move(name)), dim_(dim), kind_(std::move(kind)) {}

    std::string name_;
    std::size_t dim_;
    std::variant<ClosedForm, Integrated> kind_;
};

/// Closed-form semigroup of a builtin family (same spec as builtin_generator).
Semigroup builtin_semigroup(const BuiltinSpec& spec);

/// Doubly Richardson-extrapolated difference quotient
/// (8 D(h/4) - 6 D(h/2) + D(h)) / 3 with D(h) = (x - F_h(x)) / h.
/// Requires 0 < h <= 1e-4.
CVec generator_from_semigroup_fd(const Semigroup& sg, const BallPoint& x, double h = 1e-5);

/// ||F_{t+s}(x) - F_t(F_s(x))||.
double semigroup_residual(const Semigroup& sg, double t, double s, const BallPoint& x);

/// rho(F_t x, F_t y) - rho(x, y); <= 0 for rho-nonexpansive flows.
double nonexpansive_defect(const Semigroup& sg, double t, const BallPoint& x, const BallPoint& y);

namespace example3 {

/// First component of the Example 3 flow, written as
/// ((1+z^2)(e^{2t}-1) + 2z) / ((1+z^2)e^{2t} + (1-z) sqrt(2(1+z^2)(e^{2t}-1) + (1+z)^2)),
/// which is free of the 0/0 cancellation of the textbook form near z = 0, t = 0.
Complex flow_first(double t, Complex z);

/// d/dz of flow_first (closed form).
Complex flow_first_dz(double t, Complex z);

/// The textbook expression
/// ((1+z^2)e^{2t} - (1-z) sqrt(2(1+z^2)e^{2t} - (1-z)^2)) / ((1+z^2)e^{2t} - (1-z)^2).
Complex flow_first_textbook(double t, Complex z);

}  // namespace example3

}  // namespace hball
