#pragma once

#include <cstdint>
#include <vector>

#include "riesz/geometry.hpp"

namespace riesz {

// Surface area of the unit (n-1)-sphere, sigma_{n-1} = 2 pi^{n/2} / Gamma(n/2).
double sphere_area(int n);

// Direction/weight rule on S^{n-1}.  All volume-integral accuracy comes
// from here: the per-ray radial integrals are exact.
//
//   n = 2   uniform angular grid (periodic trapezoid; spectrally accurate
//           for smooth integrands)
//   n = 3   Fibonacci lattice, equal weights
//   n >= 4  Monte Carlo directions, equal weights, with a standard-error
//           estimate reported by the engine
struct SphereQuadrature {
    int dim = 0;
    bool monte_carlo = false;
    std::vector<Vec> directions;
    std::vector<double> weights; // sum = sigma_{n-1}

    std::size_t size() const { return directions.size(); }

    static SphereQuadrature circle(int count);
    static SphereQuadrature fibonacci_sphere(int count);
    static SphereQuadrature monte_carlo_sphere(int n, int count, std::uint64_t seed);

    // Dimension-appropriate default rule; count = 0 picks the default size
    // (4096 for n=2, 2e5 for n=3, 1e6 for n>=4).
    static SphereQuadrature make_default(int n, int count = 0, std::uint64_t seed = 0);
};

} // namespace riesz
