#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "riesz/geometry.hpp"

namespace riesz {

struct NelderMeadResult {
    Vec x;
    double fx = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Standard Nelder-Mead simplex minimization (reflection 1, expansion 2,
// contraction 0.5, shrink 0.5).  Stops when the simplex diameter falls
// below diameter_tol.  Objective may return +inf/1e300 to reject a point.
NelderMeadResult nelder_mead_minimize(const std::function<double(const Vec&)>& f, const Vec& x0,
                                      double initial_step, double diameter_tol,
                                      int max_iterations);

// Solves (-H) s = g for the Newton ascent step on a concave model, H given
// row-major n x n.  Returns nothing when -H is not positive definite
// (Cholesky breakdown), i.e. when H is not negative definite.
std::optional<Vec> newton_ascent_step(const std::vector<double>& H, const Vec& g);

// Halton low-discrepancy sequence point (prime bases per axis), index >= 0.
Vec halton_point(std::size_t index, int dim);

} // namespace riesz
