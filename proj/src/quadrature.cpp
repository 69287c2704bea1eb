#include "riesz/quadrature.hpp"

#include <cmath>
#include <random>

#include "riesz/errors.hpp"
#include "riesz/specfun.hpp"

namespace riesz {

double sphere_area(int n) {
    if (n < 1) throw validation_error("sphere_area: n must be >= 1");
    return 2.0 * std::pow(M_PI, 0.5 * n) / gamma_fn(0.5 * n);
}

SphereQuadrature SphereQuadrature::circle(int count) {
    if (count < 4) throw validation_error("circle rule: count must be >= 4");
    SphereQuadrature q;
    q.dim = 2;
    q.directions.reserve(static_cast<std::size_t>(count));
    double w = 2.0 * M_PI / count;
    for (int k = 0; k < count; ++k) {
        double th = 2.0 * M_PI * k / count;
        q.directions.push_back(Vec{std::cos(th), std::sin(th)});
    }
    q.weights.assign(static_cast<std::size_t>(count), w);
    return q;
}

SphereQuadrature SphereQuadrature::fibonacci_sphere(int count) {
    if (count < 8) throw validation_error("fibonacci rule: count must be >= 8");
    SphereQuadrature q;
    q.dim = 3;
    q.directions.reserve(static_cast<std::size_t>(count));
    const double golden_angle = M_PI * (3.0 - std::sqrt(5.0));
    for (int k = 0; k < count; ++k) {
        double z = 1.0 - (2.0 * k + 1.0) / count;
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        double phi = golden_angle * k;
        q.directions.push_back(Vec{r * std::cos(phi), r * std::sin(phi), z});
    }
    q.weights.assign(static_cast<std::size_t>(count), 4.0 * M_PI / count);
    return q;
}

SphereQuadrature SphereQuadrature::monte_carlo_sphere(int n, int count, std::uint64_t seed) {
    if (n < 2) throw validation_error("monte_carlo rule: n must be >= 2");
    if (count < 16) throw validation_error("monte_carlo rule: count must be >= 16");
    SphereQuadrature q;
    q.dim = n;
    q.monte_carlo = true;
    q.directions.reserve(static_cast<std::size_t>(count));
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int k = 0; k < count; ++k) {
        Vec v(n);
        double nrm = 0.0;
        do {
            for (int i = 0; i < n; ++i) v[i] = gauss(rng);
            nrm = v.norm();
        } while (nrm < 1e-8);
        q.directions.push_back(v / nrm);
    }
    q.weights.assign(static_cast<std::size_t>(count), sphere_area(n) / count);
    return q;
}

SphereQuadrature SphereQuadrature::make_default(int n, int count, std::uint64_t seed) {
    if (n == 2) return circle(count > 0 ? count : 4096);
    if (n == 3) return fibonacci_sphere(count > 0 ? count : 200000);
    return monte_carlo_sphere(n, count > 0 ? count : 1000000, seed);
}

} // namespace riesz
