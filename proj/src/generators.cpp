#include "hball/generators.hpp"

#include <cmath>

namespace hball {

namespace {

using Entries = std::vector<Complex>;

CVec from_entries(Entries e) { return CVec(std::move(e)); }

Entries copy_entries(const CVec& v) { return {v.entries().begin(), v.entries().end()}; }

BoundaryPoint axis_point(std::size_t dim, Complex first) {
    auto e = Entries(dim);
    e[0] = first;
    return BoundaryPoint(CVec(std::move(e)));
}

}  // namespace

std::string builtin_name(BuiltinKind kind) {
    switch (kind) {
        case BuiltinKind::Example1: return "example1";
        case BuiltinKind::Example2: return "example2";
        case BuiltinKind::Example3: return "example3";
        case BuiltinKind::Example4: return "example4";
        case BuiltinKind::Example5: return "example5";
        case BuiltinKind::Zero: return "zero";
        case BuiltinKind::ScaledIdentity: return "scaled";
    }
    return "unknown";
}

void validate(const BuiltinSpec& spec) {
    switch (spec.kind) {
        case BuiltinKind::Example1:
        case BuiltinKind::Example4:
        case BuiltinKind::Example5:
            if (spec.dim != 1) {
                throw DomainError(builtin_name(spec.kind) + " lives on the unit disk (dim must be 1)");
            }
            break;
        case BuiltinKind::Example2:
        case BuiltinKind::Example3:
            if (spec.dim < 2) {
                throw DomainError(builtin_name(spec.kind) + " needs dim = 1 + m with m >= 1");
            }
            break;
        case BuiltinKind::Zero:
        case BuiltinKind::ScaledIdentity:
            if (spec.dim < 1) {
                throw DomainError("dimension must be >= 1");
            }
            break;
    }
    if (!std::isfinite(spec.chi) || !std::isfinite(spec.scale)) {
        throw DomainError("generator parameters must be finite");
    }
}

Generator::Generator(std::string name, std::size_t dim, Eval eval, bool holomorphic,
                     std::vector<BoundaryPoint> null_points)
    : name_(std::move(name)),
      dim_(dim),
      eval_(std::move(eval)),
      holomorphic_(holomorphic),
      null_points_(std::move(null_points)) {
    for (const auto& tau : null_points_) {
        if (tau.dim() != dim_) {
            throw DimensionMismatch(tau.dim(), dim_);
        }
    }
}

CVec Generator::operator()(const BallPoint& x) const {
    if (x.dim() != dim_) {
        throw DimensionMismatch(x.dim(), dim_);
    }
    CVec out = eval_(x);
    if (out.dim() != dim_) {
        throw DimensionMismatch(out.dim(), dim_);
    }
    return out;
}

Generator builtin_generator(const BuiltinSpec& spec) {
    validate(spec);
    const std::size_t n = spec.dim;
    const std::string name = builtin_name(spec.kind);

    switch (spec.kind) {
        case BuiltinKind::Example1: {
            const double chi = spec.chi;
            auto eval = [chi](const BallPoint& x) {
                const Complex z = x.vec()[0];
                // (z + conj z)/2 + chi (z - conj z)/2 - 1
                return CVec{Complex(z.real() - 1.0, chi * z.imag())};
            };
            return Generator(name, 1, eval, chi == 1.0, {axis_point(1, 1.0)});
        }
        case BuiltinKind::Example2: {
            auto eval = [](const BallPoint& x) {
                auto e = copy_entries(x.vec());
                const Complex z1 = e[0];
                e[0] = z1 * (1.0 - z1);
                const Complex w = (1.0 - 2.0 * z1) / 2.0;
                for (std::size_t i = 1; i < e.size(); ++i) {
                    e[i] *= w;
                }
                return from_entries(std::move(e));
            };
            return Generator(name, n, eval, true, {axis_point(n, 1.0)});
        }
        case BuiltinKind::Example3: {
            auto eval = [](const BallPoint& x) {
                auto e = copy_entries(x.vec());
                const Complex z = e[0];
                const Complex p = 1.0 + z;
                e[0] = -(1.0 - z) * (1.0 + z * z) / p;
                const Complex w = (1.0 - z + z * z + z * z * z) / (p * p);
                for (std::size_t i = 1; i < e.size(); ++i) {
                    e[i] *= w;
                }
                return from_entries(std::move(e));
            };
            return Generator(name, n, eval, true,
                             {axis_point(n, 1.0), axis_point(n, Complex(0, 1)), axis_point(n, Complex(0, -1))});
        }
        case BuiltinKind::Example4: {
            auto eval = [](const BallPoint& x) {
                const Complex w = std::sqrt(1.0 - x.vec()[0]);
                return CVec{-2.0 * w * (w - 1.0)};
            };
            return Generator(name, 1, eval, true, {axis_point(1, 1.0)});
        }
        case BuiltinKind::Example5: {
            auto eval = [](const BallPoint& x) {
                const Complex z = x.vec()[0];
                // log((1+z)/(1-z)) = 2 atanh z on the disk (principal branches).
                return CVec{(1.0 - z) * (1.0 + z) * (2.0 * std::atanh(z))};
            };
            return Generator(name, 1, eval, true, {axis_point(1, 1.0), axis_point(1, -1.0)});
        }
        case BuiltinKind::Zero: {
            auto eval = [n](const BallPoint&) { return CVec::zeros(n); };
            return Generator(name, n, eval, true, {});
        }
        case BuiltinKind::ScaledIdentity: {
            const double c = spec.scale;
            auto eval = [c](const BallPoint& x) { return Complex(c) * x.vec(); };
            return Generator(name, n, eval, true, {});
        }
    }
    throw DomainError("unknown builtin generator");
}

}  // namespace hball
