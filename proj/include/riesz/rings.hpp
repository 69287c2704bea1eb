#pragma once

#include <utility>
#include <vector>

#include "riesz/quadrature.hpp"
#include "riesz/shapes.hpp"

namespace riesz {

// Minimal-ring search result.  Several centers are reported when distinct
// minimizers tie within value tolerance: non-convex bodies can have more
// than one.
struct MinimalRingReport {
    std::vector<Vec> centers; // all minimizers found, best-value order then lexicographic
    double r = 0.0;           // inradius at the first center
    double R = 0.0;           // circumradius at the first center
    double phi = 0.0;         // R - r
};

// phi(x) = R(x) - r(x), with the r = 0 convention for non-interior x.
double ring_width(const Shape& shape, const Vec& x, const SphereQuadrature& quad);

// Grid search over interior points (grid_resolution per axis within the
// bounding box) followed by Nelder-Mead refinement of the best candidates.
MinimalRingReport minimal_ring(const Shape& shape, int grid_resolution,
                               const SphereQuadrature& quad);

// Dvoretzky asphericity: min over interior x of R(x)/r(x) - 1, with the
// minimizing point.  Candidates with sampled inradius below 1e-9 are
// excluded (the ratio is undefined there).
std::pair<double, Vec> asphericity(const Shape& shape, int grid_resolution,
                                   const SphereQuadrature& quad);

// Bi-Hausdorff distance from the shape to the ball of radius rho centered
// at x: max(R - rho, rho - r, 0), r = 0 when x is not interior.
double bihausdorff_to_ball(const Shape& shape, const Vec& x, double rho,
                           const SphereQuadrature& quad);

// Best-approximating ball: center from the minimal ring, radius (R+r)/2,
// bi-Hausdorff distance (R-r)/2.
struct BestBall {
    Vec center;
    double radius = 0.0;
    double distance = 0.0;
};
BestBall best_ball(const Shape& shape, int grid_resolution, const SphereQuadrature& quad);

} // namespace riesz
