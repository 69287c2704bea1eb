#include "riesz/centers.hpp"

#include <algorithm>
#include <cmath>

#include "riesz/errors.hpp"
#include "riesz/optim.hpp"
#include "riesz/parallel.hpp"
#include "riesz/rings.hpp"

namespace riesz {

namespace {

constexpr double kReject = -1e300;

struct LocalMax {
    Vec x;
    double value;
    bool ok;
};

bool lex_less(const Vec& a, const Vec& b) {
    for (int i = 0; i < a.dim(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

} // namespace

CenterReport find_centers(const Shape& shape, const CenterSearchConfig& config,
                          const SphereQuadrature& quad) {
    if (config.starts < 1) throw validation_error("find_centers: starts must be >= 1");
    const int n = shape.dim();
    const double lambda = config.lambda;
    const Vec bc = shape.bounding_center();
    const double br = shape.bounding_radius();
    const double scale = shape.circumradius_at(bc, quad.directions);
    const double barrier = 1e-6 * scale;
    const double cluster_radius =
        config.cluster_radius > 0.0 ? config.cluster_radius : 1e-3 * scale;
    const bool interior_only = lambda <= 0.0;

    // Objective: v_hat, with the interior barrier folded into the same
    // direction sweep for lambda <= 0.
    auto objective = [&](const Vec& p) -> double {
        if (interior_only) {
            GuardedVHat g = v_hat_with_inradius(shape, p, lambda, quad);
            if (g.inradius <= barrier) return kReject;
            return g.value;
        }
        return v_hat(shape, p, lambda, quad);
    };

    // Low-discrepancy starts in the bounding ball, interior-filtered for
    // lambda <= 0.
    std::vector<Vec> starts;
    std::size_t index = 101 + config.seed * 7919;
    const std::size_t budget = 400 * static_cast<std::size_t>(config.starts);
    for (std::size_t tries = 0;
         starts.size() < static_cast<std::size_t>(config.starts) && tries < budget;
         ++tries, ++index) {
        Vec u = halton_point(index, n);
        Vec p(n);
        for (int i = 0; i < n; ++i) p[i] = bc[i] + (2.0 * u[i] - 1.0) * br;
        if ((p - bc).norm() > br) continue;
        if (interior_only) {
            if (!shape.contains(p)) continue;
            if (shape.inradius_at(p, quad.directions) <= barrier) continue;
        }
        starts.push_back(p);
    }
    if (starts.empty())
        throw validation_error(interior_only
                                   ? "find_centers: no interior start found (lambda <= 0)"
                                   : "find_centers: no start found in the bounding ball");

    const double nm_step = 0.05 * scale;
    const double nm_tol = 1e-6 * scale;

    auto run_nelder_mead = [&](const Vec& from) -> LocalMax {
        auto r = nelder_mead_minimize([&](const Vec& p) { return -objective(p); }, from,
                                      nm_step, nm_tol, config.max_iterations);
        return {r.x, -r.fx, r.converged && -r.fx > kReject / 2.0};
    };

    auto run_newton = [&](const Vec& from) -> LocalMax {
        Vec x = from;
        double fx = objective(x);
        for (int it = 0; it < 80; ++it) {
            Vec g = gradient(shape, x, lambda, quad);
            std::vector<double> H = hessian(shape, x, lambda, quad);
            auto step = newton_ascent_step(H, g);
            if (!step) return run_nelder_mead(x); // Hessian not negative definite
            double alpha = 1.0;
            Vec xn = x + *step;
            double fn = objective(xn);
            int halvings = 0;
            while (fn < fx && halvings < 20) {
                alpha *= 0.5;
                xn = x + alpha * *step;
                fn = objective(xn);
                ++halvings;
            }
            if (halvings == 20) return run_nelder_mead(x);
            double moved = (xn - x).norm();
            x = xn;
            fx = fn;
            if (moved < 1e-10 * scale) return {x, fx, true};
        }
        return {x, fx, false};
    };

    std::vector<LocalMax> results(starts.size());
    for (std::size_t i = 0; i < starts.size(); ++i)
        results[i] = lambda > 2.0 ? run_newton(starts[i]) : run_nelder_mead(starts[i]);

    std::vector<LocalMax> good;
    for (const auto& r : results)
        if (r.ok) good.push_back(r);
    if (good.empty()) throw numerical_error("find_centers: no start converged");

    std::sort(good.begin(), good.end(), [](const LocalMax& a, const LocalMax& b) {
        if (a.value != b.value) return a.value > b.value;
        return lex_less(a.x, b.x);
    });

    CenterReport rep;
    rep.lambda = lambda;
    rep.search_domain = interior_only ? "interior" : "bounding ball";
    for (const auto& r : good) {
        bool taken = false;
        for (const auto& c : rep.centers)
            if ((c.point - r.x).norm() < cluster_radius) taken = true;
        if (!taken) rep.centers.push_back({r.x, r.value});
    }
    rep.unique = rep.centers.size() == 1;
    return rep;
}

Vec centroid(const Shape& shape, const SphereQuadrature& quad) {
    const int n = shape.dim();
    const Vec origin = shape.bounding_center();
    const std::size_t m = quad.size();

    std::vector<std::vector<double>> moment(static_cast<std::size_t>(n));
    for (auto& c : moment) c.resize(m);
    std::vector<double> volume_terms;
    parallel_fill(
        m,
        [&](std::size_t k) {
            IntervalSet ivs = shape.ray_intervals(origin, quad.directions[k]);
            double vol = 0.0, mom = 0.0;
            for (const auto& iv : ivs.intervals()) {
                vol += (std::pow(iv.hi, n) - std::pow(iv.lo, n)) / n;
                mom += (std::pow(iv.hi, n + 1) - std::pow(iv.lo, n + 1)) / (n + 1);
            }
            double wm = quad.weights[k] * mom;
            for (int j = 0; j < n; ++j)
                moment[static_cast<std::size_t>(j)][k] = wm * quad.directions[k][j];
            return quad.weights[k] * vol;
        },
        volume_terms);
    double volume = pairwise_sum(volume_terms);
    if (!(volume > 0.0)) throw numerical_error("centroid: vanishing sampled volume");
    Vec c = origin;
    for (int j = 0; j < n; ++j) c[j] += pairwise_sum(moment[static_cast<std::size_t>(j)]) / volume;
    return c;
}

std::vector<SweepRow> uniqueness_sweep(const std::vector<std::pair<double, Shape>>& family,
                                       const std::vector<double>& lambdas,
                                       const CenterSearchConfig& base,
                                       const SphereQuadrature& quad, int asphericity_grid) {
    if (family.empty()) throw validation_error("uniqueness_sweep: empty family");
    std::vector<SweepRow> rows;
    for (const auto& [param, shape] : family) {
        double alpha = asphericity(shape, asphericity_grid, quad).first;
        for (double lambda : lambdas) {
            CenterSearchConfig cfg = base;
            cfg.lambda = lambda;
            CenterReport rep = find_centers(shape, cfg, quad);
            SweepRow row;
            row.param = param;
            row.lambda = lambda;
            row.n_centers = static_cast<int>(rep.centers.size());
            row.center = rep.centers.front().point;
            row.vhat = rep.centers.front().value;
            row.asphericity = alpha;
            rows.push_back(row);
        }
    }
    return rows;
}

} // namespace riesz
