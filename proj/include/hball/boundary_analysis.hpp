#pragma once

// Numerical content of the boundary Julia-Caratheodory equivalence for
// semigroup generators: the radial derivative alpha at a boundary null point,
// the infimum beta of 2 Re <f(x), x*>, the empirical decay rate gamma of
// d_tau along the flow, and the identities linking them.

#include "hball/sampler.hpp"
#include "hball/semigroup.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hball {

/// r_k = 1 - 2^{-k}, k = k_min..k_max.
std::vector<double> geometric_schedule(int k_min, int k_max);
/// k = 3..30, used for radial quotients.
std::vector<double> default_radial_schedule();
/// k = 3..48, used for the null-point norm profile.
std::vector<double> default_null_schedule();

enum class RadialVerdict { Converged, Diverged, Inconclusive };

std::string to_string(RadialVerdict v);

struct RadialPoint {
    double r;
    /// Re <f(r tau), tau> / (r - 1)
    double q;
    /// Im <f(r tau), tau> / (r - 1)
    double q_imag;
};

struct RadialProfile {
    std::vector<RadialPoint> points;
    RadialVerdict verdict = RadialVerdict::Inconclusive;
    /// Richardson-extrapolated limit; set only when Converged.
    std::optional<double> limit;
    /// Sign of q for Diverged profiles, 0 otherwise.
    int divergence_sign = 0;
    /// Set when an evaluation failed and the profile was truncated.
    std::optional<std::string> failure;
};

inline constexpr double kConvergenceTol = 1e-6;
inline constexpr double kDivergenceThreshold = 1e3;
inline constexpr double kNullTol = 1e-6;

/// q(r) along the schedule with the convergence rule: the last 5 successive
/// differences below kConvergenceTol gives Converged (limit = 2 q_last - q_prev,
/// first-order Richardson in 1 - r); |q| monotonically increasing past
/// kDivergenceThreshold gives Diverged; otherwise Inconclusive.
RadialProfile radial_profile(const Generator& gen, const BoundaryPoint& tau,
                             std::span<const double> schedule = default_radial_schedule());

struct NullPointResult {
    bool ok = false;
    /// (r, ||f(r tau)||)
    std::vector<std::pair<double, double>> norms;
    double final_norm = 0.0;
};

/// True iff ||f(r tau)|| has dropped below kNullTol at the end of the schedule.
NullPointResult check_null_point(const Generator& gen, const BoundaryPoint& tau,
                                 std::span<const double> schedule = default_null_schedule());

/// Re[<f(x),x>/(1-||x||^2) + <y,f(y)>/(1-||y||^2)] - Re[(<f(x),y> + <x,f(y)>)/(1-<x,y>)].
/// Non-negative on all pairs iff f is rho-monotone.
double monotonicity_defect(const Generator& gen, const BallPoint& x, const BallPoint& y);

/// 2 Re inner(f(x), x*) with x* the support functional at x for tau.
double support_pairing(const Generator& gen, const BallPoint& x, const BoundaryPoint& tau);

/// Left minus right side of the monotonicity inequality instantiated at
/// y = r tau, in the rearranged form
/// Re<f(x), x/(1-||x||^2) - r tau/(1 - r<tau,x>)> >= Re<f(r tau), x/(1 - r<x,tau>) - r tau/(1-r^2)>.
double radial_monotonicity_gap(const Generator& gen, const BallPoint& x, const BoundaryPoint& tau, double r);

/// |2 Re inner(f(r tau), (r tau)*) - q(r) 2/(r+1)| / max(1, |lhs|, |rhs|).
double radial_pairing_residual(const Generator& gen, const BoundaryPoint& tau, double r);

struct BetaEstimate {
    double value = 0.0;
    CVec argmin = CVec::zeros(1);
    std::size_t evaluations = 0;
    /// The minimizer sits within 10 (1 - max_norm) of the sampling shell.
    bool on_boundary_shell = false;
    /// Along the minimizer's ray the objective still drops by more than 1e-3
    /// between 1 - 1e-4 and the shell: the infimum may be -infinity.
    bool suspect_unbounded = false;
};

inline constexpr double kBetaMaxNorm = 1.0 - 1e-6;

/// inf over the ball of 2 Re inner(f(x), x*): sampled globally and along
/// radial rays, then polished from the 10 best candidates by compass search.
BetaEstimate estimate_beta(const Generator& gen, const BoundaryPoint& tau, const Sampler& sampler,
                           double max_norm = kBetaMaxNorm);

/// (ln d_tau(x) - ln d_tau(F_t x)) / t.
double gamma_sample(const Semigroup& sg, const BoundaryPoint& tau, const BallPoint& x, double t);

struct GammaEstimate {
    double value = 0.0;
    CVec argmin_x = CVec::zeros(1);
    double argmin_t = 0.0;
    std::size_t samples = 0;
    /// Flow evaluations that failed or left the ball.
    std::size_t skipped = 0;
};

inline constexpr double kGammaMaxNorm = 1.0 - 1e-5;

std::vector<double> default_t_grid();

/// Minimum of gamma_sample over the sampled points and t_grid.
GammaEstimate empirical_gamma(const Semigroup& sg, const BoundaryPoint& tau, const Sampler& sampler,
                              std::span<const double> t_grid, double max_norm = kGammaMaxNorm);

/// |dpsi/dt(0) - (-2 psi(0) Re inner(f(x), x*))| with psi(t) = d_tau(F_t x).
/// The derivative uses a one-sided fourth-order stencil on t = 0, h, ..., 4h,
/// since F_t exists only for t >= 0.
double psi_derivative_identity(const Generator& gen, const Semigroup& sg, const BallPoint& x,
                               const BoundaryPoint& tau, double h = 1e-5);

/// Points of the open unit disk with |lambda| <= 1 - 1e-9 and |1 - lambda| >= 1e-3.
std::vector<Complex> herglotz_lambda_samples(std::uint64_t seed, std::size_t count);

/// Re[g(lambda) / -(1-lambda)^2] with
/// g(lambda) = <f(lambda tau), tau> - beta/2 (lambda^2 - 1).
double herglotz_ratio(const Generator& gen, const BoundaryPoint& tau, double beta, Complex lambda);

/// min over lambda of Re[g(lambda) / -(1-lambda)^2] with
/// g(lambda) = <f(lambda tau), tau> - beta/2 (lambda^2 - 1). Holomorphic f only.
double herglotz_positivity(const Generator& gen, const BoundaryPoint& tau, double beta,
                           std::span<const Complex> lambdas);

/// max |Im <f(r tau), tau> / (r - 1)| over the last 5 schedule points.
/// Holomorphic f only.
double holomorphic_real_limit_check(const Generator& gen, const BoundaryPoint& tau,
                                    std::span<const double> schedule = default_radial_schedule());

}  // namespace hball
