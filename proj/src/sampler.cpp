#include "hball/sampler.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <tuple>

namespace hball {

namespace {

constexpr std::array<std::uint64_t, 16> kPrimes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

double radical_inverse(std::uint64_t k, std::uint64_t base) {
    double inv = 1.0 / static_cast<double>(base);
    double f = inv;
    double r = 0.0;
    while (k > 0) {
        r += f * static_cast<double>(k % base);
        k /= base;
        f *= inv;
    }
    return r;
}

// Box-Muller on a pair of (quasi-)uniforms in (0,1) x [0,1).
std::pair<double, double> box_muller(double u1, double u2) {
    const double rad = std::sqrt(-2.0 * std::log(u1));
    const double ang = 2.0 * std::numbers::pi * u2;
    return {rad * std::cos(ang), rad * std::sin(ang)};
}

CVec scaled_direction(const std::vector<double>& gauss, double radius) {
    double nrm2 = 0.0;
    for (const double g : gauss) {
        nrm2 += g * g;
    }
    const double scale = radius / std::sqrt(nrm2);
    std::vector<Complex> e(gauss.size() / 2);
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = Complex(gauss[2 * i] * scale, gauss[2 * i + 1] * scale);
    }
    return CVec(std::move(e));
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double Rng::normal() {
    double u1 = uniform();
    while (u1 == 0.0) {
        u1 = uniform();
    }
    return box_muller(u1, uniform()).first;
}

CVec random_unit_vector(Rng& rng, std::size_t dim) {
    std::vector<double> g(2 * dim);
    double nrm2 = 0.0;
    do {
        nrm2 = 0.0;
        for (auto& v : g) {
            v = rng.normal();
            nrm2 += v * v;
        }
    } while (nrm2 < 1e-300);
    return scaled_direction(g, 1.0);
}

BallPoint random_ball_point(Rng& rng, std::size_t dim, double max_norm) {
    const CVec u = random_unit_vector(rng, dim);
    const double r = max_norm * std::pow(rng.uniform(), 1.0 / static_cast<double>(2 * dim));
    return BallPoint(Complex(r) * u);
}

std::vector<double> halton_point(std::uint64_t k, std::size_t dims) {
    if (dims > kPrimes.size()) {
        throw DomainError("Halton sequence supports at most 16 dimensions");
    }
    std::vector<double> out(dims);
    for (std::size_t i = 0; i < dims; ++i) {
        out[i] = radical_inverse(k, kPrimes[i]);
    }
    return out;
}

std::vector<BallPoint> sample_ball(const Sampler& sampler, const BoundaryPoint& tau, double max_norm) {
    if (sampler.dim != tau.dim()) {
        throw DimensionMismatch(sampler.dim, tau.dim());
    }
    if (!(max_norm > 0.0 && max_norm < kBallMargin)) {
        throw DomainError("sampling radius must lie in (0, 1)");
    }
    if (!(sampler.radial_fraction >= 0.0 && sampler.radial_fraction <= 1.0)) {
        throw DomainError("radial_fraction must lie in [0, 1]");
    }
    const std::size_t dim = sampler.dim;
    const std::size_t real_dims = 2 * dim;
    const auto n_radial = static_cast<std::size_t>(std::llround(sampler.radial_fraction * static_cast<double>(sampler.n_points)));
    const std::size_t n_global = sampler.n_points - n_radial;

    Rng rng(sampler.seed);
    std::vector<double> shift(real_dims + 1);
    for (auto& s : shift) {
        s = rng.uniform();
    }

    std::vector<BallPoint> out;
    out.reserve(sampler.n_points);
    for (std::size_t k = 1; k <= n_global; ++k) {
        auto h = halton_point(k, real_dims + 1);
        for (std::size_t i = 0; i < h.size(); ++i) {
            h[i] += shift[i];
            h[i] -= std::floor(h[i]);
        }
        std::vector<double> gauss(real_dims);
        for (std::size_t i = 0; i < dim; ++i) {
            const double u1 = h[2 * i] > 0.0 ? h[2 * i] : 0.5 / static_cast<double>(n_global);
            std::tie(gauss[2 * i], gauss[2 * i + 1]) = box_muller(u1, h[2 * i + 1]);
        }
        const double radius = max_norm * std::pow(h[real_dims], 1.0 / static_cast<double>(real_dims));
        out.emplace_back(scaled_direction(gauss, radius));
    }

    const double depth = -std::log10(1.0 - max_norm);
    for (std::size_t k = 0; k < n_radial; ++k) {
        const double s = rng.uniform(0.3, depth);
        const double r = std::min(1.0 - std::pow(10.0, -s), max_norm);
        const CVec dir = (k % 2 == 0) ? tau.vec() : random_unit_vector(rng, dim);
        out.emplace_back(Complex(r) * dir);
    }
    return out;
}

}  // namespace hball
