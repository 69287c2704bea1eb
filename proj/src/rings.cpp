#include "riesz/rings.hpp"

#include <algorithm>
#include <cmath>

#include "riesz/errors.hpp"
#include "riesz/optim.hpp"

namespace riesz {

namespace {

constexpr int kRefineCandidates = 8;
constexpr double kValueTieTol = 1e-6;
constexpr double kHuge = 1e300;

struct Candidate {
    Vec x;
    double value;
};

bool lex_less(const Vec& a, const Vec& b) {
    for (int i = 0; i < a.dim(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

// Interior grid scan + Nelder-Mead refinement shared by the ring and
// asphericity searches.  Returns all refined minimizers within value_tie of
// the best, deduplicated at dedupe_radius, best first.
std::vector<Candidate> grid_refine(const Shape& shape, int grid_resolution,
                                   const std::function<double(const Vec&)>& objective,
                                   double dedupe_radius, double refine_step) {
    if (grid_resolution < 2) throw validation_error("grid search: resolution must be >= 2");
    Vec lo, hi;
    shape.bounding_box(lo, hi);
    const int d = shape.dim();

    std::vector<Candidate> grid_best;
    std::vector<int> idx(static_cast<std::size_t>(d), 0);
    bool any_interior = false;
    while (true) {
        Vec p(d);
        for (int i = 0; i < d; ++i)
            p[i] = lo[i] + (hi[i] - lo[i]) * (idx[static_cast<std::size_t>(i)] + 0.5) /
                               grid_resolution;
        if (shape.contains(p)) {
            any_interior = true;
            double v = objective(p);
            if (v < kHuge) {
                grid_best.push_back({p, v});
                std::push_heap(grid_best.begin(), grid_best.end(),
                               [](const Candidate& a, const Candidate& b) {
                                   return a.value < b.value;
                               });
                if (grid_best.size() > kRefineCandidates) {
                    std::pop_heap(grid_best.begin(), grid_best.end(),
                                  [](const Candidate& a, const Candidate& b) {
                                      return a.value < b.value;
                                  });
                    grid_best.pop_back();
                }
            }
        }
        int axis = 0;
        while (axis < d && ++idx[static_cast<std::size_t>(axis)] == grid_resolution) {
            idx[static_cast<std::size_t>(axis)] = 0;
            ++axis;
        }
        if (axis == d) break;
    }
    if (!any_interior) throw validation_error("grid search: shape has empty sampled interior");
    if (grid_best.empty())
        throw validation_error("grid search: no admissible candidate on the grid");

    std::vector<Candidate> refined;
    for (const auto& c : grid_best) {
        auto r = nelder_mead_minimize(objective, c.x, refine_step, 1e-9 + refine_step * 1e-4,
                                      600);
        refined.push_back({r.x, r.fx});
    }
    std::sort(refined.begin(), refined.end(), [](const Candidate& a, const Candidate& b) {
        if (a.value != b.value) return a.value < b.value;
        return lex_less(a.x, b.x);
    });

    std::vector<Candidate> out;
    double best = refined.front().value;
    for (const auto& c : refined) {
        if (c.value > best + kValueTieTol) break;
        bool dup = false;
        for (const auto& kept : out)
            if ((kept.x - c.x).norm() < dedupe_radius) dup = true;
        if (!dup) out.push_back(c);
    }
    return out;
}

} // namespace

double ring_width(const Shape& shape, const Vec& x, const SphereQuadrature& quad) {
    double R = shape.circumradius_at(x, quad.directions);
    double r = shape.inradius_at(x, quad.directions);
    return R - r;
}

MinimalRingReport minimal_ring(const Shape& shape, int grid_resolution,
                               const SphereQuadrature& quad) {
    double scale = shape.circumradius_at(shape.bounding_center(), quad.directions);
    auto objective = [&](const Vec& p) { return ring_width(shape, p, quad); };
    auto found = grid_refine(shape, grid_resolution, objective, 1e-3 * scale, 0.02 * scale);

    MinimalRingReport rep;
    for (const auto& c : found) rep.centers.push_back(c.x);
    const Vec& x0 = rep.centers.front();
    rep.r = shape.inradius_at(x0, quad.directions);
    rep.R = shape.circumradius_at(x0, quad.directions);
    rep.phi = rep.R - rep.r;
    return rep;
}

std::pair<double, Vec> asphericity(const Shape& shape, int grid_resolution,
                                   const SphereQuadrature& quad) {
    double scale = shape.circumradius_at(shape.bounding_center(), quad.directions);
    auto objective = [&](const Vec& p) {
        if (!shape.contains(p)) return kHuge;
        double r = shape.inradius_at(p, quad.directions);
        if (r < 1e-9) return kHuge;
        return shape.circumradius_at(p, quad.directions) / r - 1.0;
    };
    auto found = grid_refine(shape, grid_resolution, objective, 1e-3 * scale, 0.02 * scale);
    return {found.front().value, found.front().x};
}

double bihausdorff_to_ball(const Shape& shape, const Vec& x, double rho,
                           const SphereQuadrature& quad) {
    if (!(rho > 0.0)) throw validation_error("bihausdorff_to_ball: rho must be positive");
    double R = shape.circumradius_at(x, quad.directions);
    double r = shape.inradius_at(x, quad.directions);
    return std::max({R - rho, rho - r, 0.0});
}

BestBall best_ball(const Shape& shape, int grid_resolution, const SphereQuadrature& quad) {
    MinimalRingReport ring = minimal_ring(shape, grid_resolution, quad);
    BestBall b;
    b.center = ring.centers.front();
    b.radius = 0.5 * (ring.R + ring.r);
    b.distance = 0.5 * (ring.R - ring.r);
    return b;
}

} // namespace riesz
