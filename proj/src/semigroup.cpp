#include "hball/semigroup.hpp"

#include <cmath>

namespace hball {

namespace {

void check_time(double t) {
    if (!(t >= 0.0) || t > kMaxFlowTime) {
        throw DomainError("flow time must lie in [0, " + std::to_string(kMaxFlowTime) + "]");
    }
}

std::vector<Complex> copy_entries(const CVec& v) { return {v.entries().begin(), v.entries().end()}; }

}  // namespace

namespace example3 {

Complex flow_first(double t, Complex z) {
    const double em1 = std::expm1(2.0 * t);
    const Complex a = 1.0 + z * z;
    const Complex num = a * em1 + 2.0 * z;
    const Complex s = std::sqrt(2.0 * a * em1 + (1.0 + z) * (1.0 + z));
    return num / (a * (1.0 + em1) + (1.0 - z) * s);
}

Complex flow_first_dz(double t, Complex z) {
    const double em1 = std::expm1(2.0 * t);
    const double e = 1.0 + em1;
    const Complex a = 1.0 + z * z;
    const Complex num = a * em1 + 2.0 * z;
    const Complex num_dz = 2.0 * z * em1 + 2.0;
    const Complex s = std::sqrt(2.0 * a * em1 + (1.0 + z) * (1.0 + z));
    const Complex s_dz = (2.0 * z * em1 + 1.0 + z) / s;
    const Complex den = a * e + (1.0 - z) * s;
    const Complex den_dz = 2.0 * z * e - s + (1.0 - z) * s_dz;
    return (num_dz * den - num * den_dz) / (den * den);
}

Complex flow_first_textbook(double t, Complex z) {
    const double e = std::exp(2.0 * t);
    const Complex a = 1.0 + z * z;
    const Complex b = 1.0 - z;
    return (a * e - b * std::sqrt(2.0 * a * e - b * b)) / (a * e - b * b);
}

}  // namespace example3

Semigroup Semigroup::closed_form(std::string name, std::size_t dim, Map map) {
    return Semigroup(std::move(name), dim, ClosedForm{std::move(map)});
}

Semigroup Semigroup::integrated(Generator gen, IntegratorConfig cfg) {
    cfg.validate();
    std::string name = gen.name() + " (integrated)";
    const std::size_t dim = gen.dim();
    return Semigroup(std::move(name), dim, Integrated{std::move(gen), cfg});
}

CVec Semigroup::evaluate(double t, const BallPoint& x) const {
    check_time(t);
    if (x.dim() != dim_) {
        throw DimensionMismatch(x.dim(), dim_);
    }
    if (const auto* cf = std::get_if<ClosedForm>(&kind_)) {
        return cf->map(t, x);
    }
    const auto& in = std::get<Integrated>(kind_);
    return integrate_flow(in.gen, x, t, in.cfg).final_state().vec();
}

BallPoint Semigroup::apply(double t, const BallPoint& x) const { return BallPoint(evaluate(t, x)); }

Semigroup builtin_semigroup(const BuiltinSpec& spec) {
    validate(spec);
    const std::string name = builtin_name(spec.kind);
    const std::size_t n = spec.dim;

    switch (spec.kind) {
        case BuiltinKind::Example1: {
            const double chi = spec.chi;
            return Semigroup::closed_form(name, 1, [chi](double t, const BallPoint& x) {
                const Complex z = x.vec()[0];
                // 1 - e^{-t} + e^{-t} Re z + e^{-chi t} i Im z
                const double re = -std::expm1(-t) + std::exp(-t) * z.real();
                return CVec{Complex(re, std::exp(-chi * t) * z.imag())};
            });
        }
        case BuiltinKind::Example2:
            return Semigroup::closed_form(name, n, [](double t, const BallPoint& x) {
                auto e = copy_entries(x.vec());
                const Complex z1 = e[0];
                const Complex den = 1.0 + std::expm1(t) * (1.0 - z1);  // z1 + e^t (1 - z1)
                e[0] = z1 / den;
                const Complex w = std::exp(0.5 * t) / den;
                for (std::size_t i = 1; i < e.size(); ++i) {
                    e[i] *= w;
                }
                return CVec(std::move(e));
            });
        case BuiltinKind::Example3:
            return Semigroup::closed_form(name, n, [](double t, const BallPoint& x) {
                auto e = copy_entries(x.vec());
                const Complex z1 = e[0];
                e[0] = example3::flow_first(t, z1);
                const Complex w = std::sqrt(example3::flow_first_dz(t, z1));
                for (std::size_t i = 1; i < e.size(); ++i) {
                    e[i] *= w;
                }
                return CVec(std::move(e));
            });
        case BuiltinKind::Example4:
            return Semigroup::closed_form(name, 1, [](double t, const BallPoint& x) {
                // 1 - (1 - u)^2 = u (2 - u) with u = e^{-t} (1 - sqrt(1 - z)).
                const Complex u = std::exp(-t) * (1.0 - std::sqrt(1.0 - x.vec()[0]));
                return CVec{u * (2.0 - u)};
            });
        case BuiltinKind::Example5:
            return Semigroup::closed_form(name, 1, [](double t, const BallPoint& x) {
                // ((1+z)^a - (1-z)^a) / ((1+z)^a + (1-z)^a) = tanh(a atanh z), a = e^{-2t}.
                const double a = std::exp(-2.0 * t);
                return CVec{std::tanh(a * std::atanh(x.vec()[0]))};
            });
        case BuiltinKind::Zero:
            return Semigroup::closed_form(name, n, [](double, const BallPoint& x) { return x.vec(); });
        case BuiltinKind::ScaledIdentity: {
            const double c = spec.scale;
            return Semigroup::closed_form(name, n,
                                          [c](double t, const BallPoint& x) { return Complex(std::exp(-c * t)) * x.vec(); });
        }
    }
    throw DomainError("unknown builtin semigroup");
}

CVec generator_from_semigroup_fd(const Semigroup& sg, const BallPoint& x, double h) {
    if (!(h > 0.0 && h <= 1e-4)) {
        throw DomainError("finite-difference step must lie in (0, 1e-4]");
    }
    auto quotient = [&](double s) { return (x.vec() - sg.evaluate(s, x)) / s; };
    const CVec d1 = quotient(h);
    const CVec d2 = quotient(0.5 * h);
    const CVec d4 = quotient(0.25 * h);
    // Two Richardson levels: errors O(h), O(h^2) eliminated.
    return (Complex(8.0) * d4 - Complex(6.0) * d2 + d1) / 3.0;
}

double semigroup_residual(const Semigroup& sg, double t, double s, const BallPoint& x) {
    check_time(t + s);
    const CVec direct = sg.evaluate(t + s, x);
    const CVec composed = sg.evaluate(t, sg.apply(s, x));
    return distance(direct, composed);
}

double nonexpansive_defect(const Semigroup& sg, double t, const BallPoint& x, const BallPoint& y) {
    return rho(sg.apply(t, x), sg.apply(t, y)) - rho(x, y);
}

}  // namespace hball
