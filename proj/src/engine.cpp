#include "riesz/engine.hpp"

#include <cmath>
#include <limits>

#include "riesz/errors.hpp"
#include "riesz/parallel.hpp"

namespace riesz {

namespace {

constexpr double kZeroLo = 1e-12; // interval lower ends below this start "at the origin"

// integral of r^p dr over [lo, hi]; lo = 0 drops the lower-limit term
// (finite part for p <= -1, plain limit otherwise)
double power_integral(double lo, double hi, double p) {
    if (p == -1.0) {
        if (lo <= kZeroLo) return std::log(hi); // finite part of log r at 0
        return std::log(hi / lo);
    }
    double q = p + 1.0;
    double upper = std::pow(hi, q) / q;
    if (lo <= kZeroLo) return upper;
    return upper - std::pow(lo, q) / q;
}

double log_primitive(double r, int n) {
    if (r == 0.0) return 0.0;
    double rn = std::pow(r, n);
    return rn * std::log(1.0 / r) / n + rn / (n * n);
}

void check_point(const Shape& shape, const Vec& x) {
    if (x.dim() != shape.dim())
        throw validation_error("potential: point dimension does not match shape");
}

void check_quad(const Shape& shape, const SphereQuadrature& quad) {
    if (quad.dim != shape.dim())
        throw validation_error("potential: quadrature dimension does not match shape");
}

struct SweepResult {
    double value = 0.0;
    double min_first_exit = 0.0;
    bool any_started_inside = false;
    std::optional<double> std_error;
};

// One pass over the directions: contribution sum plus the sampled first-exit
// minimum, so the lambda <= 0 interior test does not cost a second sweep.
SweepResult sweep(const Shape& shape, const Vec& x, double lambda, bool log_mode,
                  const SphereQuadrature& quad) {
    const std::size_t m = quad.size();
    std::vector<double> contrib;
    std::vector<double> exits(m);
    parallel_fill(
        m,
        [&](std::size_t k) {
            IntervalSet ivs = shape.ray_intervals(x, quad.directions[k]);
            exits[k] = Shape::first_exit(ivs);
            return quad.weights[k] * ray_contribution(ivs, lambda, log_mode, shape.dim());
        },
        contrib);
    SweepResult r;
    r.value = pairwise_sum(contrib);
    double mn = std::numeric_limits<double>::infinity();
    bool inside = false;
    for (double e : exits) {
        mn = std::min(mn, e);
        inside = inside || e > 0.0;
    }
    r.min_first_exit = std::isfinite(mn) ? mn : 0.0;
    r.any_started_inside = inside;
    if (quad.monte_carlo && m > 1) {
        // contrib[k] = w f_k with equal w = sigma/m: SE of the mean estimate
        double mean = r.value / static_cast<double>(m);
        double ss = 0.0;
        for (double c : contrib) ss += (c - mean) * (c - mean);
        r.std_error = std::sqrt(ss / (static_cast<double>(m) - 1.0)) *
                      std::sqrt(static_cast<double>(m));
    }
    return r;
}

} // namespace

double ray_contribution(const IntervalSet& intervals, double lambda, bool log_mode, int dim) {
    double s = 0.0;
    if (log_mode) {
        if (lambda <= 0.0)
            throw validation_error("ray_contribution: log mode excludes lambda <= 0");
        for (const auto& iv : intervals.intervals())
            s += log_primitive(iv.hi, dim) - log_primitive(iv.lo, dim);
        return s;
    }
    for (const auto& iv : intervals.intervals())
        s += power_integral(iv.lo, iv.hi, lambda - 1.0);
    return s;
}

PotentialValue potential(const Shape& shape, const Vec& x, double lambda,
                         const SphereQuadrature& quad) {
    check_point(shape, x);
    check_quad(shape, quad);
    SweepResult r = sweep(shape, x, lambda, false, quad);
    bool interior = r.any_started_inside && r.min_first_exit > detail::kInteriorTol;
    if (lambda <= 0.0 && !interior && shape.contains(x))
        throw validation_error(
            "potential: lambda <= 0 on the boundary is outside the regularization scheme");
    PotentialValue out;
    out.value = r.value;
    out.regularized = lambda <= 0.0 && r.any_started_inside;
    out.quadrature_size = quad.size();
    out.std_error = r.std_error;
    return out;
}

double potential_via_complement(const Shape& shape, const Vec& x, double lambda,
                                const SphereQuadrature& quad, double world_radius) {
    check_point(shape, x);
    check_quad(shape, quad);
    if (lambda >= 0.0)
        throw validation_error("potential_via_complement: requires lambda < 0");
    const std::size_t m = quad.size();
    std::vector<double> contrib;
    parallel_fill(
        m,
        [&](std::size_t k) {
            IntervalSet ivs = shape.ray_intervals(x, quad.directions[k]);
            const auto& v = ivs.intervals();
            if (v.empty() || v.front().lo > kZeroLo)
                return std::numeric_limits<double>::quiet_NaN(); // ray starts outside
            // gaps between the body intervals, then [last, W] plus the
            // analytic tail  integral_W^inf r^{lambda-1} dr = -W^lambda/lambda
            double s = 0.0;
            for (std::size_t i = 0; i + 1 < v.size(); ++i)
                s += power_integral(v[i].hi, v[i + 1].lo, lambda - 1.0);
            double last = v.back().hi;
            if (last < world_radius) s += power_integral(last, world_radius, lambda - 1.0);
            s += -std::pow(world_radius, lambda) / lambda;
            return -quad.weights[k] * s;
        },
        contrib);
    for (double c : contrib)
        if (std::isnan(c))
            throw validation_error("potential_via_complement: point must be interior");
    return pairwise_sum(contrib);
}

double log_potential(const Shape& shape, const Vec& x, const SphereQuadrature& quad) {
    check_point(shape, x);
    check_quad(shape, quad);
    return sweep(shape, x, shape.dim(), true, quad).value;
}

double v_hat(const Shape& shape, const Vec& x, double lambda, const SphereQuadrature& quad) {
    int n = shape.dim();
    if (std::fabs(lambda - n) < 1e-12) return log_potential(shape, x, quad);
    return potential(shape, x, lambda, quad).value / (n - lambda);
}

GuardedVHat v_hat_with_inradius(const Shape& shape, const Vec& x, double lambda,
                                const SphereQuadrature& quad) {
    check_point(shape, x);
    check_quad(shape, quad);
    int n = shape.dim();
    bool log_mode = std::fabs(lambda - n) < 1e-12;
    SweepResult r = sweep(shape, x, lambda, log_mode, quad);
    GuardedVHat g;
    g.inradius = r.min_first_exit;
    g.value = log_mode ? r.value : r.value / (n - lambda);
    return g;
}

Vec gradient(const Shape& shape, const Vec& x, double lambda, const SphereQuadrature& quad) {
    check_point(shape, x);
    check_quad(shape, quad);
    if (lambda <= 1.0 && shape.contains(x))
        throw validation_error("gradient: volume form needs lambda > 1 or an exterior point");
    const int n = shape.dim();
    const std::size_t m = quad.size();
    std::vector<std::vector<double>> comp(static_cast<std::size_t>(n));
    for (auto& c : comp) c.resize(m);
    std::vector<double> dummy;
    parallel_fill(
        m,
        [&](std::size_t k) {
            IntervalSet ivs = shape.ray_intervals(x, quad.directions[k]);
            double radial = 0.0;
            for (const auto& iv : ivs.intervals())
                radial += power_integral(iv.lo, iv.hi, lambda - 2.0);
            double wr = quad.weights[k] * radial;
            for (int j = 0; j < n; ++j) comp[static_cast<std::size_t>(j)][k] =
                wr * quad.directions[k][j];
            return 0.0;
        },
        dummy);
    Vec g(n);
    for (int j = 0; j < n; ++j) g[j] = pairwise_sum(comp[static_cast<std::size_t>(j)]);
    return g;
}

std::vector<double> hessian(const Shape& shape, const Vec& x, double lambda,
                            const SphereQuadrature& quad) {
    check_point(shape, x);
    check_quad(shape, quad);
    if (lambda <= 2.0 && shape.contains(x))
        throw validation_error("hessian: volume form needs lambda > 2 or an exterior point");
    const int n = shape.dim();
    const std::size_t m = quad.size();
    const std::size_t nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    std::vector<std::vector<double>> comp(nn);
    for (auto& c : comp) c.resize(m);
    std::vector<double> dummy;
    parallel_fill(
        m,
        [&](std::size_t k) {
            IntervalSet ivs = shape.ray_intervals(x, quad.directions[k]);
            double radial = 0.0;
            for (const auto& iv : ivs.intervals())
                radial += power_integral(iv.lo, iv.hi, lambda - 3.0);
            double wr = quad.weights[k] * radial;
            const Vec& d = quad.directions[k];
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    double term = (lambda - n - 2.0) * d[i] * d[j] + (i == j ? 1.0 : 0.0);
                    comp[static_cast<std::size_t>(i * n + j)][k] = -wr * term;
                }
            return 0.0;
        },
        dummy);
    std::vector<double> H(nn);
    for (std::size_t e = 0; e < nn; ++e) H[e] = pairwise_sum(comp[e]);
    // enforce exact symmetry against rounding drift
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::size_t ij = static_cast<std::size_t>(i * n + j);
            std::size_t ji = static_cast<std::size_t>(j * n + i);
            double avg = 0.5 * (H[ij] + H[ji]);
            H[ij] = H[ji] = avg;
        }
    return H;
}

} // namespace riesz
