#pragma once

#include "hball/ball_geometry.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace hball {

/// Seed used by every randomized check unless overridden.
inline constexpr std::uint64_t kDefaultSeed = 42;

/// Portable random stream: mt19937_64 bits mapped to doubles by hand so the
/// sequence does not depend on the standard library's distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Standard normal via Box-Muller (one value per call).
    double normal();

private:
    std::mt19937_64 engine_;
};

/// Independent stream seed from a user seed (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Uniformly distributed (by volume) in the ball of radius max_norm.
BallPoint random_ball_point(Rng& rng, std::size_t dim, double max_norm);
CVec random_unit_vector(Rng& rng, std::size_t dim);

/// k-th point (k >= 1) of the Halton sequence in `dims` dimensions.
std::vector<double> halton_point(std::uint64_t k, std::size_t dims);

struct Sampler {
    std::uint64_t seed = kDefaultSeed;
    std::size_t n_points = 4000;
    /// Fraction of points placed on rays r*tau and r*u (u random unit).
    double radial_fraction = 0.3;
    std::size_t dim = 1;
};

/// Deterministic sample of the ball: a shifted Halton set mapped into the
/// ball of radius max_norm, plus radial points r = 1 - 10^{-s} on rays toward
/// tau and toward random boundary directions, with 1 - r >= 1 - max_norm.
std::vector<BallPoint> sample_ball(const Sampler& sampler, const BoundaryPoint& tau, double max_norm);

}  // namespace hball
