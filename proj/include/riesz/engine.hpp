#pragma once

#include <optional>
#include <vector>

#include "riesz/quadrature.hpp"
#include "riesz/shapes.hpp"

namespace riesz {

// Result of a potential evaluation.  `regularized` records whether the
// Hadamard finite part was actually invoked (lambda <= 0 with the point
// interior); `std_error` is populated for Monte Carlo direction rules.
struct PotentialValue {
    double value = 0.0;
    bool regularized = false;
    std::size_t quadrature_size = 0;
    std::optional<double> std_error;
};

// Integral of r^{lambda-1} over the intervals of one ray (log_mode: the
// log-potential primitive r^n log(1/r)/n + r^n/n^2 instead).  An interval
// starting at r = 0 drops its lower-limit term: for lambda <= 0 that is
// exactly the per-ray Hadamard finite part, and the term vanishes anyway
// for lambda > 0.
double ray_contribution(const IntervalSet& intervals, double lambda, bool log_mode, int dim);

// V^{(lambda)}(x) = sum_k w_k * ray_contribution(intervals_k, lambda).
// For lambda <= 0, x on the boundary (contained but with vanishing sampled
// inradius) is rejected.
PotentialValue potential(const Shape& shape, const Vec& x, double lambda,
                         const SphereQuadrature& quad);

// Same value through the complement formula, valid for lambda < 0 at
// interior x: V = -integral over the complement, with the analytic
// r -> infinity tail appended after world_radius.
double potential_via_complement(const Shape& shape, const Vec& x, double lambda,
                                const SphereQuadrature& quad,
                                double world_radius = Shape::kWorldRadius);

// Normalized potential V / (n - lambda); the log potential when lambda = n.
double v_hat(const Shape& shape, const Vec& x, double lambda, const SphereQuadrature& quad);

// Log potential, integral of log(1/|x-y|) over the shape.
double log_potential(const Shape& shape, const Vec& x, const SphereQuadrature& quad);

// v_hat plus the sampled inradius, both from one direction sweep; used by
// the center search, whose lambda <= 0 interior barrier would otherwise
// double the ray-casting cost of every objective evaluation.
struct GuardedVHat {
    double value = 0.0;
    double inradius = 0.0;
};
GuardedVHat v_hat_with_inradius(const Shape& shape, const Vec& x, double lambda,
                                const SphereQuadrature& quad);

// Gradient of v_hat, volume form: valid for lambda > 1 or x outside the
// shape.  Per ray the integrand reduces to dir_j * r^{lambda-2}.
Vec gradient(const Shape& shape, const Vec& x, double lambda, const SphereQuadrature& quad);

// Hessian of v_hat (row-major n x n, symmetric): valid for lambda > 2 or x
// outside.  Per ray: -[(lambda-n-2) dir_i dir_j + delta_ij] r^{lambda-3}.
std::vector<double> hessian(const Shape& shape, const Vec& x, double lambda,
                            const SphereQuadrature& quad);

namespace detail {
// Sampled inradius threshold below which a contained point counts as a
// boundary point for the lambda <= 0 precondition.
inline constexpr double kInteriorTol = 1e-9;
} // namespace detail

} // namespace riesz
