#pragma once

#include "hball/ball_geometry.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hball {

/// The built-in generator families.
enum class BuiltinKind {
    Example1,        // f(z) = Re z + i chi Im z - 1 on the disk
    Example2,        // (z1(1 - z1), (1 - 2 z1) z2 / 2) on C x C^m
    Example3,        // three boundary null points (1,0), (i,0), (-i,0)
    Example4,        // -2 sqrt(1-z) (sqrt(1-z) - 1), no angular derivative at 1
    Example5,        // (1 - z^2) log((1+z)/(1-z))
    Zero,            // f = 0, identity flow
    ScaledIdentity,  // f(x) = c x, flow e^{-ct} x
};

struct BuiltinSpec {
    BuiltinKind kind = BuiltinKind::Zero;
    /// Total dimension; Example2/3 use z1 in C and z2 in C^(dim-1).
    std::size_t dim = 1;
    /// Example1 only.
    double chi = 1.0;
    /// ScaledIdentity only.
    double scale = 1.0;
};

/// Validates `spec.dim` against the family's structure; throws DomainError.
void validate(const BuiltinSpec& spec);

/// Infinitesimal generator f : B -> C^n of a flow dx/dt = -f(x).
class Generator {
public:
    using Eval = std::function<CVec(const BallPoint&)>;

    Generator(std::string name, std::size_t dim, Eval eval, bool holomorphic,
              std::vector<BoundaryPoint> null_points);

    CVec operator()(const BallPoint& x) const;

    const std::string& name() const noexcept { return name_; }
    std::size_t dim() const noexcept { return dim_; }
    bool is_holomorphic() const noexcept { return holomorphic_; }
    const std::vector<BoundaryPoint>& declared_null_points() const noexcept { return null_points_; }

private:
    std::string name_;
    std::size_t dim_;
    Eval eval_;
    bool holomorphic_;
    std::vector<BoundaryPoint> null_points_;
};

Generator builtin_generator(const BuiltinSpec& spec);

/// Canonical short name ("example1", ..., "zero", "scaled").
std::string builtin_name(BuiltinKind kind);

}  // namespace hball
