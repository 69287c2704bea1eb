#include "riesz/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace riesz {

namespace {

constexpr double kDirTol = 1e-12;
constexpr int kStarScanSamples = 128;

void check_same_dim(int a, int b, const char* what) {
    if (a != b)
        throw validation_error(std::string(what) + ": dimension mismatch (" +
                               std::to_string(a) + " vs " + std::to_string(b) + ")");
}

} // namespace

double Shape::Node::star_rho(double theta) const {
    const std::size_t m = samples.size();
    double u = theta / (2.0 * M_PI) * static_cast<double>(m);
    double fi = std::floor(u);
    double frac = u - fi;
    long i = static_cast<long>(fi) % static_cast<long>(m);
    if (i < 0) i += static_cast<long>(m);
    std::size_t i0 = static_cast<std::size_t>(i);
    std::size_t i1 = (i0 + 1) % m;
    return samples[i0] * (1.0 - frac) + samples[i1] * frac;
}

// --- constructors ----------------------------------------------------------

Shape Shape::ball(Vec center, double radius) {
    if (!(radius > 0.0)) throw validation_error("ball: radius must be positive");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Ball;
    n->dim = center.dim();
    n->center = center;
    n->radius = radius;
    return Shape(n);
}

Shape Shape::box(Vec lo, Vec hi) {
    check_same_dim(lo.dim(), hi.dim(), "box");
    for (int i = 0; i < lo.dim(); ++i)
        if (!(lo[i] < hi[i])) throw validation_error("box: min must be < max componentwise");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Box;
    n->dim = lo.dim();
    n->lo = lo;
    n->hi = hi;
    return Shape(n);
}

Shape Shape::half_space(Vec normal, double offset) {
    if (std::fabs(normal.norm() - 1.0) > 1e-9)
        throw validation_error("half_space: normal must be a unit vector");
    auto n = std::make_shared<Node>();
    n->kind = Kind::HalfSpace;
    n->dim = normal.dim();
    n->normal = normal;
    n->offset = offset;
    return Shape(n);
}

Shape Shape::star_body_2d(std::vector<double> radial_samples) {
    if (radial_samples.size() < 3)
        throw validation_error("star_body_2d: need at least 3 radial samples");
    for (double r : radial_samples)
        if (!(r > 0.0)) throw validation_error("star_body_2d: all samples must be positive");
    auto n = std::make_shared<Node>();
    n->kind = Kind::StarBody2D;
    n->dim = 2;
    n->samples = std::move(radial_samples);
    return Shape(n);
}

Shape Shape::union_of_balls(std::vector<std::pair<Vec, double>> balls) {
    if (balls.empty()) throw validation_error("union_of_balls: empty list");
    int d = balls.front().first.dim();
    for (const auto& [c, r] : balls) {
        check_same_dim(c.dim(), d, "union_of_balls");
        if (!(r > 0.0)) throw validation_error("union_of_balls: radius must be positive");
    }
    auto n = std::make_shared<Node>();
    n->kind = Kind::UnionOfBalls;
    n->dim = d;
    n->balls = std::move(balls);
    return Shape(n);
}

Shape Shape::csg_union(std::vector<Shape> children) {
    if (children.empty()) throw validation_error("union: empty children");
    int d = children.front().dim();
    for (const auto& c : children) check_same_dim(c.dim(), d, "union");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Union;
    n->dim = d;
    n->children = std::move(children);
    return Shape(n);
}

Shape Shape::csg_intersection(std::vector<Shape> children) {
    if (children.empty()) throw validation_error("intersection: empty children");
    int d = children.front().dim();
    for (const auto& c : children) check_same_dim(c.dim(), d, "intersection");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Intersection;
    n->dim = d;
    n->children = std::move(children);
    return Shape(n);
}

Shape Shape::csg_difference(Shape left, Shape right) {
    check_same_dim(left.dim(), right.dim(), "difference");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Difference;
    n->dim = left.dim();
    n->children = {std::move(left), std::move(right)};
    return Shape(n);
}

Shape Shape::translate(Shape child, Vec offset) {
    check_same_dim(child.dim(), offset.dim(), "translate");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Translate;
    n->dim = child.dim();
    n->shift = offset;
    n->children = {std::move(child)};
    return Shape(n);
}

Shape Shape::scale(Shape child, double factor) {
    if (!(factor > 0.0)) throw validation_error("scale: factor must be positive");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Scale;
    n->dim = child.dim();
    n->factor = factor;
    n->children = {std::move(child)};
    return Shape(n);
}

Shape Shape::parallel_body(const std::vector<Vec>& points, double ell) {
    if (points.empty()) throw validation_error("parallel_body: empty point cloud");
    if (!(ell > 0.0)) throw validation_error("parallel_body: ell must be positive");
    std::vector<std::pair<Vec, double>> balls;
    balls.reserve(points.size());
    for (const auto& p : points) balls.emplace_back(p, ell);
    return union_of_balls(std::move(balls));
}

Shape::Kind Shape::kind() const { return node_->kind; }
int Shape::dim() const { return node_->dim; }

// --- membership --------------------------------------------------------------

namespace {

// strict=false: closed set membership; strict=true: an interior test used by
// Difference (A minus the interior of B keeps the inner boundary).
bool contains_impl(const Shape::Node& n, const Vec& x, bool strict) {
    auto cmp = [strict](double a, double b) { return strict ? a < b : a <= b; };
    switch (n.kind) {
        case Shape::Kind::Ball:
            return cmp((x - n.center).norm2(), n.radius * n.radius);
        case Shape::Kind::Box:
            for (int i = 0; i < n.dim; ++i)
                if (!cmp(n.lo[i], x[i]) || !cmp(x[i], n.hi[i])) return false;
            return true;
        case Shape::Kind::HalfSpace:
            return cmp(n.normal.dot(x), n.offset);
        case Shape::Kind::StarBody2D: {
            double r = x.norm();
            if (r == 0.0) return true;
            return cmp(r, n.star_rho(std::atan2(x[1], x[0])));
        }
        case Shape::Kind::UnionOfBalls:
            for (const auto& [c, r] : n.balls)
                if (cmp((x - c).norm2(), r * r)) return true;
            return false;
        case Shape::Kind::Union:
            for (const auto& ch : n.children)
                if (contains_impl(ch.node(), x, strict)) return true;
            return false;
        case Shape::Kind::Intersection:
            for (const auto& ch : n.children)
                if (!contains_impl(ch.node(), x, strict)) return false;
            return true;
        case Shape::Kind::Difference:
            // closed: left and not interior(right); strict: interior(left)
            // and not closed(right)
            return contains_impl(n.children[0].node(), x, strict) &&
                   !contains_impl(n.children[1].node(), x, !strict);
        case Shape::Kind::Translate:
            return contains_impl(n.children[0].node(), x - n.shift, strict);
        case Shape::Kind::Scale:
            return contains_impl(n.children[0].node(), x / n.factor, strict);
    }
    return false;
}

} // namespace

bool Shape::contains(const Vec& x) const {
    check_same_dim(x.dim(), dim(), "contains");
    return contains_impl(*node_, x, false);
}

// --- ray intervals -------------------------------------------------------------

namespace {

IntervalSet ray_impl(const Shape::Node& n, const Vec& o, const Vec& v);

IntervalSet ray_single_ball(const Vec& o, const Vec& v, const Vec& c, double r) {
    IntervalSet out;
    Vec oc = o - c;
    double b = v.dot(oc);
    double q = oc.norm2() - r * r;
    double disc = b * b - q;
    if (disc <= 0.0) return out;
    double s = std::sqrt(disc);
    double t1 = -b - s, t2 = -b + s;
    if (t2 <= 0.0) return out;
    out.add(std::max(t1, 0.0), t2);
    return out;
}

IntervalSet ray_box(const Shape::Node& n, const Vec& o, const Vec& v) {
    IntervalSet out;
    double tmin = 0.0;
    double tmax = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n.dim; ++i) {
        if (std::fabs(v[i]) < 1e-15) {
            if (o[i] < n.lo[i] || o[i] > n.hi[i]) return out;
            continue;
        }
        double ta = (n.lo[i] - o[i]) / v[i];
        double tb = (n.hi[i] - o[i]) / v[i];
        if (ta > tb) std::swap(ta, tb);
        tmin = std::max(tmin, ta);
        tmax = std::min(tmax, tb);
    }
    if (tmax > tmin) out.add(tmin, tmax);
    return out;
}

IntervalSet ray_half_space(const Shape::Node& n, const Vec& o, const Vec& v) {
    IntervalSet out;
    const double W = Shape::kWorldRadius;
    double s0 = n.normal.dot(o) - n.offset; // <= 0 means inside
    double sv = n.normal.dot(v);
    if (std::fabs(sv) < 1e-15) {
        if (s0 <= 0.0) out.add(0.0, W);
        return out;
    }
    double tc = -s0 / sv;
    if (sv < 0.0) {
        // entering the half-space
        double lo = std::max(tc, 0.0);
        if (lo < W) out.add(lo, W);
    } else {
        // leaving it
        if (tc > 0.0) out.add(0.0, std::min(tc, W));
    }
    return out;
}

IntervalSet ray_star(const Shape::Node& n, const Vec& o, const Vec& v) {
    IntervalSet out;
    double max_rho = *std::max_element(n.samples.begin(), n.samples.end());
    double rmax = o.norm() + 1.02 * max_rho;

    auto g = [&](double r) {
        Vec p = o + r * v;
        double d = p.norm();
        if (d == 0.0) return -n.samples.front(); // origin is interior
        return d - n.star_rho(std::atan2(p[1], p[0]));
    };

    // Coarse scan for sign changes, then bisection.  Crossings closer than
    // rmax / kStarScanSamples apart can be missed; fine for the gently
    // perturbed disks this representation targets.
    double h = rmax / kStarScanSamples;
    double prev_r = 0.0;
    double prev_g = g(0.0);
    double entry = prev_g <= 0.0 ? 0.0 : -1.0;
    for (int i = 1; i <= kStarScanSamples; ++i) {
        double r = i * h;
        double gi = g(r);
        if ((prev_g <= 0.0) != (gi <= 0.0)) {
            double a = prev_r, b = r;
            for (int it = 0; it < 80; ++it) {
                double m = 0.5 * (a + b);
                if ((g(m) <= 0.0) == (prev_g <= 0.0))
                    a = m;
                else
                    b = m;
                if (b - a < 1e-14 * rmax) break;
            }
            double cross = 0.5 * (a + b);
            if (prev_g <= 0.0) {
                out.add(entry, cross);
                entry = -1.0;
            } else {
                entry = cross;
            }
        }
        prev_r = r;
        prev_g = gi;
    }
    if (entry >= 0.0 && prev_g <= 0.0) out.add(entry, rmax);
    return out;
}

IntervalSet ray_impl(const Shape::Node& n, const Vec& o, const Vec& v) {
    switch (n.kind) {
        case Shape::Kind::Ball:
            return ray_single_ball(o, v, n.center, n.radius);
        case Shape::Kind::Box:
            return ray_box(n, o, v);
        case Shape::Kind::HalfSpace:
            return ray_half_space(n, o, v);
        case Shape::Kind::StarBody2D:
            return ray_star(n, o, v);
        case Shape::Kind::UnionOfBalls: {
            IntervalSet acc;
            for (const auto& [c, r] : n.balls)
                acc = IntervalSet::set_union(acc, ray_single_ball(o, v, c, r));
            return acc;
        }
        case Shape::Kind::Union: {
            IntervalSet acc = ray_impl(n.children[0].node(), o, v);
            for (std::size_t i = 1; i < n.children.size(); ++i)
                acc = IntervalSet::set_union(acc, ray_impl(n.children[i].node(), o, v));
            return acc;
        }
        case Shape::Kind::Intersection: {
            IntervalSet acc = ray_impl(n.children[0].node(), o, v);
            for (std::size_t i = 1; i < n.children.size(); ++i) {
                if (acc.empty()) break;
                acc = IntervalSet::set_intersection(acc, ray_impl(n.children[i].node(), o, v));
            }
            return acc;
        }
        case Shape::Kind::Difference: {
            IntervalSet a = ray_impl(n.children[0].node(), o, v);
            if (a.empty()) return a;
            return IntervalSet::set_difference(a, ray_impl(n.children[1].node(), o, v));
        }
        case Shape::Kind::Translate:
            return ray_impl(n.children[0].node(), o - n.shift, v);
        case Shape::Kind::Scale:
            return ray_impl(n.children[0].node(), o / n.factor, v).scaled(n.factor);
    }
    return IntervalSet();
}

} // namespace

IntervalSet Shape::ray_intervals(const Vec& origin, const Vec& dir) const {
    check_same_dim(origin.dim(), dim(), "ray_intervals");
    check_same_dim(dir.dim(), dim(), "ray_intervals");
    if (std::fabs(dir.norm() - 1.0) > kDirTol)
        throw validation_error("ray_intervals: direction must be unit length");
    return ray_impl(*node_, origin, dir);
}

// --- radial metrics -------------------------------------------------------------

double Shape::inradius_at(const Vec& x, const std::vector<Vec>& directions) const {
    if (node_->kind == Kind::Ball)
        return std::max(0.0, node_->radius - (x - node_->center).norm());
    if (node_->kind == Kind::UnionOfBalls && node_->balls.size() == 1)
        return std::max(0.0, node_->balls[0].second - (x - node_->balls[0].first).norm());
    if (!contains(x)) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& v : directions) {
        double e = first_exit(ray_intervals(x, v));
        if (e < best) best = e;
        if (best == 0.0) break;
    }
    return std::isfinite(best) ? best : 0.0;
}

double Shape::circumradius_at(const Vec& x, const std::vector<Vec>& directions) const {
    const Node& n = *node_;
    switch (n.kind) {
        case Kind::Ball:
            return (x - n.center).norm() + n.radius;
        case Kind::UnionOfBalls: {
            double best = 0.0;
            for (const auto& [c, r] : n.balls) best = std::max(best, (x - c).norm() + r);
            return best;
        }
        case Kind::Box: {
            // farthest corner
            double best = 0.0;
            int d = n.dim;
            for (int mask = 0; mask < (1 << d); ++mask) {
                Vec corner(d);
                for (int i = 0; i < d; ++i) corner[i] = (mask >> i) & 1 ? n.hi[i] : n.lo[i];
                best = std::max(best, (x - corner).norm());
            }
            return best;
        }
        case Kind::Union: {
            double best = 0.0;
            for (const auto& ch : n.children)
                best = std::max(best, ch.circumradius_at(x, directions));
            return best;
        }
        case Kind::Translate:
            return n.children[0].circumradius_at(x - n.shift, directions);
        case Kind::Scale:
            return n.factor * n.children[0].circumradius_at(x / n.factor, directions);
        default: {
            // farthest sampled crossing
            double best = 0.0;
            for (const auto& v : directions) {
                const auto& ivs = ray_intervals(x, v).intervals();
                if (!ivs.empty()) best = std::max(best, ivs.back().hi);
            }
            return best;
        }
    }
}

// --- bounding data -------------------------------------------------------------

void Shape::bounding_box(Vec& lo, Vec& hi) const {
    const Node& n = *node_;
    int d = n.dim;
    lo = Vec(d);
    hi = Vec(d);
    switch (n.kind) {
        case Kind::Ball:
            for (int i = 0; i < d; ++i) {
                lo[i] = n.center[i] - n.radius;
                hi[i] = n.center[i] + n.radius;
            }
            return;
        case Kind::Box:
            lo = n.lo;
            hi = n.hi;
            return;
        case Kind::HalfSpace:
            for (int i = 0; i < d; ++i) {
                lo[i] = -kWorldRadius;
                hi[i] = kWorldRadius;
            }
            return;
        case Kind::StarBody2D: {
            double m = *std::max_element(n.samples.begin(), n.samples.end());
            for (int i = 0; i < d; ++i) {
                lo[i] = -m;
                hi[i] = m;
            }
            return;
        }
        case Kind::UnionOfBalls: {
            for (int i = 0; i < d; ++i) {
                lo[i] = std::numeric_limits<double>::infinity();
                hi[i] = -std::numeric_limits<double>::infinity();
            }
            for (const auto& [c, r] : n.balls)
                for (int i = 0; i < d; ++i) {
                    lo[i] = std::min(lo[i], c[i] - r);
                    hi[i] = std::max(hi[i], c[i] + r);
                }
            return;
        }
        case Kind::Union: {
            n.children[0].bounding_box(lo, hi);
            for (std::size_t k = 1; k < n.children.size(); ++k) {
                Vec l2, h2;
                n.children[k].bounding_box(l2, h2);
                for (int i = 0; i < d; ++i) {
                    lo[i] = std::min(lo[i], l2[i]);
                    hi[i] = std::max(hi[i], h2[i]);
                }
            }
            return;
        }
        case Kind::Intersection: {
            n.children[0].bounding_box(lo, hi);
            for (std::size_t k = 1; k < n.children.size(); ++k) {
                Vec l2, h2;
                n.children[k].bounding_box(l2, h2);
                for (int i = 0; i < d; ++i) {
                    lo[i] = std::max(lo[i], l2[i]);
                    hi[i] = std::min(hi[i], h2[i]);
                }
            }
            return;
        }
        case Kind::Difference:
            n.children[0].bounding_box(lo, hi);
            return;
        case Kind::Translate: {
            n.children[0].bounding_box(lo, hi);
            lo += n.shift;
            hi += n.shift;
            return;
        }
        case Kind::Scale: {
            n.children[0].bounding_box(lo, hi);
            lo *= n.factor;
            hi *= n.factor;
            return;
        }
    }
}

Vec Shape::bounding_center() const {
    Vec lo, hi;
    bounding_box(lo, hi);
    return 0.5 * (lo + hi);
}

double Shape::bounding_radius() const {
    Vec lo, hi;
    bounding_box(lo, hi);
    return 0.5 * (hi - lo).norm();
}

// --- fixtures -------------------------------------------------------------------

namespace fixtures {

Shape unit_ball(int n) { return Shape::ball(Vec(n), 1.0); }

Shape unit_box(int n) {
    Vec lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        lo[i] = -1.0;
        hi[i] = 1.0;
    }
    return Shape::box(lo, hi);
}

Shape two_balls() {
    return Shape::union_of_balls({{Vec{-3.0, 0.0}, 1.0}, {Vec{3.0, 0.0}, 1.0}});
}

Shape slit_ball(double eps, int n) {
    Vec en = Vec::unit(n, n - 1);
    Shape ball = unit_ball(n);
    Shape upper = Shape::csg_intersection({ball, Shape::half_space(-1.0 * en, -eps)});
    Shape lower = Shape::csg_intersection({ball, Shape::half_space(en, -eps)});
    return Shape::csg_union({upper, lower});
}

Shape two_lobe_x(double eps) {
    Vec A{0.0, 0.0}, B{1.0, 0.0};
    Shape diskA = Shape::ball(A, 1.0);
    Shape diskB = Shape::ball(B, 1.0);
    Shape arcA = Shape::csg_intersection(
        {Shape::csg_difference(Shape::ball(A, 2.0), Shape::ball(A, 2.0 - eps)),
         Shape::half_space(Vec{-1.0, 0.0}, -0.5)}); // x1 >= 1/2
    Shape arcB = Shape::csg_intersection(
        {Shape::csg_difference(Shape::ball(B, 2.0), Shape::ball(B, 2.0 - eps)),
         Shape::half_space(Vec{1.0, 0.0}, 0.5)}); // x1 <= 1/2
    return Shape::csg_union({diskA, diskB, arcA, arcB});
}

Shape star_cos3(double eps, int samples) {
    std::vector<double> rho(static_cast<std::size_t>(samples));
    for (int k = 0; k < samples; ++k) {
        double th = 2.0 * M_PI * k / samples;
        rho[static_cast<std::size_t>(k)] = 1.0 + eps * std::cos(3.0 * th);
    }
    return Shape::star_body_2d(std::move(rho));
}

} // namespace fixtures

} // namespace riesz
