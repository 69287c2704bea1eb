#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "riesz/engine.hpp"

namespace riesz {

struct CenterSearchConfig {
    double lambda = 2.0;
    int starts = 24;
    double cluster_radius = 0.0; // 0 -> 1e-3 * shape circumradius
    int max_iterations = 600;
    std::uint64_t seed = 0;
};

// Clustered local maximizers of v_hat.  `unique` holds exactly when one
// cluster was found; entries are best-value first.
struct CenterReport {
    struct Entry {
        Vec point;
        double value; // v_hat at the point
    };
    std::vector<Entry> centers;
    bool unique = false;
    double lambda = 0.0;
    std::string search_domain; // "bounding ball" or "interior"
};

// Multi-start search for the extremizers of the potential: local maxima of
// v_hat, which folds every lambda regime into one maximization.  Starts are
// low-discrepancy points in the bounding ball; for lambda <= 0 they are
// confined to the sampled interior and an interior barrier keeps iterates
// off the boundary, where the regularized potential diverges to -inf.
CenterReport find_centers(const Shape& shape, const CenterSearchConfig& config,
                          const SphereQuadrature& quad);

// Center of mass from per-ray first moments over the quadrature.
Vec centroid(const Shape& shape, const SphereQuadrature& quad);

// One row of the uniqueness sweep over a parametrized shape family.
struct SweepRow {
    double param = 0.0;
    double lambda = 0.0;
    int n_centers = 0;
    Vec center;        // best center
    double vhat = 0.0; // value at the best center
    double asphericity = 0.0;
};

// Runs find_centers for every (family member, lambda) pair and records the
// multiplicity together with the asphericity of the member.
std::vector<SweepRow> uniqueness_sweep(const std::vector<std::pair<double, Shape>>& family,
                                       const std::vector<double>& lambdas,
                                       const CenterSearchConfig& base,
                                       const SphereQuadrature& quad,
                                       int asphericity_grid = 48);

} // namespace riesz
