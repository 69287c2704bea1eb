#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "riesz/geometry.hpp"

namespace riesz {

// CSG shape algebra over R^n.  A Shape is an immutable tree; copies share
// nodes, so passing shapes by value is cheap and thread-safe.
//
// Every constructor except half_space realizes a compact body.  A raw
// half-space is only legal inside an intersection/difference that bounds
// it; its ray intervals are clipped at kWorldRadius to stay finite.
class Shape {
public:
    static constexpr double kWorldRadius = 1e6;

    enum class Kind {
        Ball,
        Box,
        HalfSpace,
        StarBody2D,
        UnionOfBalls,
        Union,
        Intersection,
        Difference,
        Translate,
        Scale,
    };

    // --- constructors -----------------------------------------------------
    static Shape ball(Vec center, double radius);
    static Shape box(Vec lo, Vec hi);
    // {x : normal . x <= offset}, |normal| = 1
    static Shape half_space(Vec normal, double offset);
    // 2-D star body about the origin: radial samples rho(theta_k) > 0 on the
    // uniform grid theta_k = 2 pi k / samples.size(), linearly interpolated.
    static Shape star_body_2d(std::vector<double> radial_samples);
    static Shape union_of_balls(std::vector<std::pair<Vec, double>> balls);
    static Shape csg_union(std::vector<Shape> children);
    static Shape csg_intersection(std::vector<Shape> children);
    static Shape csg_difference(Shape left, Shape right);
    static Shape translate(Shape child, Vec offset);
    static Shape scale(Shape child, double factor);

    // Parallel body of a finite point cloud: union of ell-balls.
    static Shape parallel_body(const std::vector<Vec>& points, double ell);

    // --- queries -----------------------------------------------------------
    Kind kind() const;
    int dim() const;

    // Membership in the closed realized set.
    bool contains(const Vec& x) const;

    // {t >= 0 : origin + t dir in shape}.  |dir| must be 1 within 1e-12.
    IntervalSet ray_intervals(const Vec& origin, const Vec& dir) const;

    // First exit parameter along one ray: hi of the interval containing 0,
    // or 0 when the ray does not start inside.  Shares the interval logic
    // with ray_intervals; split out so callers fusing several per-direction
    // quantities cast each ray once.
    static double first_exit(const IntervalSet& ivs) {
        const auto& v = ivs.intervals();
        if (v.empty() || v.front().lo > IntervalSet::kMergeEps) return 0.0;
        return v.front().hi;
    }

    // min over sampled directions of the first exit; 0 for non-interior x.
    // Exact for a single ball (fast path), an upper bound converging from
    // above as the direction set refines otherwise.
    double inradius_at(const Vec& x, const std::vector<Vec>& directions) const;

    // max_{y in shape} |y - x|.  Exact for Ball/Box/UnionOfBalls (and
    // unions thereof); direction-sampled farthest crossing for
    // intersections, differences, star bodies and half-space leaves.
    double circumradius_at(const Vec& x, const std::vector<Vec>& directions) const;

    // Axis-aligned bounding box (conservative).
    void bounding_box(Vec& lo, Vec& hi) const;
    Vec bounding_center() const;
    // Radius of a ball around bounding_center() that contains the shape.
    double bounding_radius() const;

    // --- node data accessors (used by serialization) ------------------------
    struct Node;
    const Node& node() const { return *node_; }

private:
    explicit Shape(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct Shape::Node {
    Kind kind;
    int dim = 0;

    // Ball
    Vec center;
    double radius = 0.0;
    // Box
    Vec lo, hi;
    // HalfSpace
    Vec normal;
    double offset = 0.0;
    // StarBody2D
    std::vector<double> samples;
    // UnionOfBalls
    std::vector<std::pair<Vec, double>> balls;
    // boolean nodes / transforms
    std::vector<Shape> children;
    Vec shift;
    double factor = 1.0;

    // StarBody2D radial function, linear interpolation in angle.
    double star_rho(double theta) const;
};

// Named fixtures used across tests and the CLI.
namespace fixtures {

// Unit ball at the origin.
Shape unit_ball(int n = 2);
// [-1,1]^2 box.
Shape unit_box(int n = 2);
// Two disjoint unit disks at (-3,0) and (3,0).
Shape two_balls();
// Ball with a horizontal slit of half-width eps through the center:
// (B^n intersect {x_n >= eps}) union (B^n intersect {x_n <= -eps}).
Shape slit_ball(double eps = 0.1, int n = 2);
// Two unit disks at (0,0) and (1,0) plus two clipped annular arcs of radii
// [2-eps, 2]; has two minimal-ring centers.
Shape two_lobe_x(double eps = 0.1);
// Star body rho(theta) = 1 + eps cos(3 theta).
Shape star_cos3(double eps, int samples = 720);

} // namespace fixtures

} // namespace riesz
