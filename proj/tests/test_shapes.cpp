#include <doctest.h>

#include <cmath>
#include <random>

#include "riesz/errors.hpp"
#include "riesz/quadrature.hpp"
#include "riesz/shapes.hpp"

using namespace riesz;

namespace {

Vec dir2(double theta) { return Vec{std::cos(theta), std::sin(theta)}; }

// Small random CSG trees over 2-D primitives for the property tests.
Shape random_shape(std::mt19937_64& rng, int depth = 0) {
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    std::uniform_int_distribution<int> leaf(0, 3);
    std::uniform_int_distribution<int> combo(0, 4);
    auto rnd_ball = [&] {
        return Shape::ball(Vec{U(rng), U(rng)}, 0.3 + 0.5 * std::fabs(U(rng)));
    };
    if (depth >= 2 || combo(rng) == 0) {
        switch (leaf(rng)) {
            case 0: return rnd_ball();
            case 1: {
                double x = U(rng), y = U(rng);
                return Shape::box(Vec{x, y}, Vec{x + 0.4 + std::fabs(U(rng)),
                                                 y + 0.4 + std::fabs(U(rng))});
            }
            case 2: {
                std::vector<std::pair<Vec, double>> balls;
                int m = 2 + static_cast<int>(rng() % 3);
                for (int i = 0; i < m; ++i)
                    balls.emplace_back(Vec{U(rng), U(rng)}, 0.2 + 0.4 * std::fabs(U(rng)));
                return Shape::union_of_balls(std::move(balls));
            }
            default: {
                std::vector<double> rho(64);
                double eps = 0.1 * std::fabs(U(rng));
                for (int k = 0; k < 64; ++k)
                    rho[static_cast<std::size_t>(k)] =
                        0.8 + eps * std::cos(3.0 * (2.0 * M_PI * k / 64));
                return Shape::star_body_2d(std::move(rho));
            }
        }
    }
    switch (combo(rng)) {
        case 1:
            return Shape::csg_union({random_shape(rng, depth + 1), random_shape(rng, depth + 1)});
        case 2:
            return Shape::csg_intersection({random_shape(rng, depth + 1), rnd_ball()});
        case 3:
            return Shape::csg_difference(random_shape(rng, depth + 1), rnd_ball());
        default:
            return rng() % 2 ? Shape::translate(random_shape(rng, depth + 1),
                                                Vec{U(rng), U(rng)})
                             : Shape::scale(random_shape(rng, depth + 1),
                                            0.5 + std::fabs(U(rng)));
    }
}

} // namespace

TEST_CASE("contains basics") {
    CHECK(fixtures::unit_ball(2).contains(Vec{0.0, 0.0}));
    Shape annulus = Shape::csg_difference(Shape::ball(Vec{0.0, 0.0}, 2.0),
                                          Shape::ball(Vec{0.0, 0.0}, 1.0));
    CHECK_FALSE(annulus.contains(Vec{0.0, 0.0}));
    CHECK(annulus.contains(Vec{1.5, 0.0}));
    CHECK(Shape::box(Vec{0.0, 0.0}, Vec{1.0, 2.0}).contains(Vec{0.5, 1.9}));
}

TEST_CASE("ray_intervals basics") {
    Vec o{0.0, 0.0};
    Vec e1{1.0, 0.0};
    auto ball = fixtures::unit_ball(2).ray_intervals(o, e1).intervals();
    REQUIRE(ball.size() == 1);
    CHECK(ball[0].lo == doctest::Approx(0.0));
    CHECK(ball[0].hi == doctest::Approx(1.0));

    Shape two = Shape::csg_union({fixtures::unit_ball(2), Shape::ball(Vec{3.0, 0.0}, 1.0)});
    auto tb = two.ray_intervals(o, e1).intervals();
    REQUIRE(tb.size() == 2);
    CHECK(tb[0].hi == doctest::Approx(1.0));
    CHECK(tb[1].lo == doctest::Approx(2.0));
    CHECK(tb[1].hi == doctest::Approx(4.0));

    Shape annulus = Shape::csg_difference(Shape::ball(Vec{0.0, 0.0}, 2.0),
                                          Shape::ball(Vec{0.0, 0.0}, 1.0));
    auto an = annulus.ray_intervals(o, e1).intervals();
    REQUIRE(an.size() == 1);
    CHECK(an[0].lo == doctest::Approx(1.0));
    CHECK(an[0].hi == doctest::Approx(2.0));

    CHECK_THROWS_AS(fixtures::unit_ball(2).ray_intervals(o, Vec{2.0, 0.0}), validation_error);
}

TEST_CASE("inradius_at") {
    auto dirs = SphereQuadrature::circle(1024).directions;
    Shape ball = fixtures::unit_ball(2);
    CHECK(ball.inradius_at(Vec{0.25, 0.0}, dirs) == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(ball.inradius_at(Vec{2.0, 0.0}, dirs) == 0.0);

    // golden value from 1e6-direction sampling: the lens corner of the
    // two-disk union sits at distance sqrt(0.9375) from (0.25, 0)
    Shape uni = Shape::csg_union({ball, Shape::ball(Vec{0.5, 0.0}, 1.0)});
    auto dense = SphereQuadrature::circle(1000000).directions;
    CHECK(uni.inradius_at(Vec{0.25, 0.0}, dense) ==
          doctest::Approx(0.96824583655185426).epsilon(1e-9));
}

TEST_CASE("circumradius_at") {
    auto dirs = SphereQuadrature::circle(512).directions;
    CHECK(fixtures::unit_ball(2).circumradius_at(Vec{0.25, 0.0}, dirs) ==
          doctest::Approx(1.25).epsilon(1e-14));
    CHECK(fixtures::unit_box(2).circumradius_at(Vec{0.0, 0.0}, dirs) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    Shape uob = Shape::union_of_balls({{Vec{0.0, 0.0}, 1.0}, {Vec{3.0, 0.0}, 1.0}});
    CHECK(uob.circumradius_at(Vec{0.0, 0.0}, dirs) == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("parallel_body") {
    Shape single = Shape::parallel_body({Vec{0.0, 0.0}}, 2.0);
    CHECK(single.contains(Vec{1.9, 0.0}));
    CHECK_FALSE(single.contains(Vec{2.1, 0.0}));

    Shape three = Shape::parallel_body({Vec{0.0, 0.0}, Vec{1.0, 0.0}, Vec{0.0, 1.0}}, 0.1);
    CHECK(three.contains(Vec{1.05, 0.0}));
    CHECK_FALSE(three.contains(Vec{0.5, 0.5}));
    CHECK_THROWS_AS(Shape::parallel_body({}, 1.0), validation_error);
}

TEST_CASE("interval/membership coherence on random shapes") {
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> T(0.0, 3.0);
    std::uniform_real_distribution<double> TH(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    for (int rep = 0; rep < 25; ++rep) {
        Shape s = random_shape(rng);
        for (int r = 0; r < 5; ++r) {
            Vec o{U(rng), U(rng)};
            Vec v = dir2(TH(rng));
            IntervalSet ivs = s.ray_intervals(o, v);
            for (int k = 0; k < 100; ++k) {
                double t = T(rng);
                bool near_endpoint = false;
                for (const auto& iv : ivs.intervals())
                    if (std::fabs(t - iv.lo) < 1e-9 || std::fabs(t - iv.hi) < 1e-9)
                        near_endpoint = true;
                if (near_endpoint) continue;
                CHECK(s.contains(o + t * v) == ivs.member(t));
            }
        }
    }
}

TEST_CASE("boolean algebra on interval sets") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> TH(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    for (int rep = 0; rep < 25; ++rep) {
        Shape a = random_shape(rng);
        Shape b = random_shape(rng);
        Vec o{U(rng), U(rng)};
        Vec v = dir2(TH(rng));
        auto ia = a.ray_intervals(o, v);
        auto ib = b.ray_intervals(o, v);

        auto check_equal = [](const IntervalSet& x, const IntervalSet& y) {
            const auto& xs = x.intervals();
            const auto& ys = y.intervals();
            REQUIRE(xs.size() == ys.size());
            for (std::size_t i = 0; i < xs.size(); ++i) {
                CHECK(xs[i].lo == ys[i].lo);
                CHECK(xs[i].hi == ys[i].hi);
            }
        };
        check_equal(Shape::csg_union({a, b}).ray_intervals(o, v),
                    IntervalSet::set_union(ia, ib));
        check_equal(Shape::csg_intersection({a, b}).ray_intervals(o, v),
                    IntervalSet::set_intersection(ia, ib));
        check_equal(Shape::csg_difference(a, b).ray_intervals(o, v),
                    IntervalSet::set_difference(ia, ib));
    }
}

TEST_CASE("scale covariance of ray intervals") {
    std::mt19937_64 rng(4321);
    std::uniform_real_distribution<double> TH(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    for (double k : {0.5, 2.0}) {
        for (int rep = 0; rep < 10; ++rep) {
            Shape a = random_shape(rng);
            Vec o{U(rng), U(rng)};
            Vec v = dir2(TH(rng));
            auto base = a.ray_intervals(o, v).intervals();
            auto scaled = Shape::scale(a, k).ray_intervals(k * o, v).intervals();
            REQUIRE(base.size() == scaled.size());
            for (std::size_t i = 0; i < base.size(); ++i) {
                CHECK(scaled[i].lo == doctest::Approx(k * base[i].lo).epsilon(1e-12));
                CHECK(scaled[i].hi == doctest::Approx(k * base[i].hi).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("inradius <= circumradius, equality only at a ball center") {
    auto dirs = SphereQuadrature::circle(512).directions;
    std::mt19937_64 rng(555);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    for (int rep = 0; rep < 15; ++rep) {
        Shape s = random_shape(rng);
        for (int k = 0; k < 20; ++k) {
            Vec x{U(rng), U(rng)};
            if (!s.contains(x)) continue;
            double r = s.inradius_at(x, dirs);
            double R = s.circumradius_at(x, dirs);
            CHECK(r <= R + 1e-12);
        }
    }
    Shape ball = Shape::ball(Vec{0.4, -0.7}, 1.3);
    CHECK(ball.inradius_at(Vec{0.4, -0.7}, dirs) ==
          doctest::Approx(ball.circumradius_at(Vec{0.4, -0.7}, dirs)).epsilon(1e-14));
}

TEST_CASE("star body geometry") {
    Shape star = fixtures::star_cos3(0.1);
    auto dirs = SphereQuadrature::circle(512).directions;
    // rho(0) = 1.1 along e1
    auto iv = star.ray_intervals(Vec{0.0, 0.0}, Vec{1.0, 0.0}).intervals();
    REQUIRE(iv.size() == 1);
    CHECK(iv[0].hi == doctest::Approx(1.1).epsilon(1e-9));
    // rho(pi/3) = 0.9
    auto iv2 = star.ray_intervals(Vec{0.0, 0.0}, dir2(M_PI / 3.0)).intervals();
    REQUIRE(iv2.size() == 1);
    CHECK(iv2[0].hi == doctest::Approx(0.9).epsilon(1e-6));
    CHECK(star.contains(Vec{0.0, 0.0}));
    // boundary crossing agrees with membership from an off-center origin
    Vec o{0.3, -0.2};
    Vec v = dir2(2.1);
    auto ivs = star.ray_intervals(o, v);
    REQUIRE(!ivs.empty());
    double hit = ivs.intervals()[0].hi;
    CHECK(star.contains(o + (hit - 1e-6) * v));
    CHECK_FALSE(star.contains(o + (hit + 1e-6) * v));
}

TEST_CASE("half-space only bounded inside intersections") {
    Shape hs = Shape::half_space(Vec{0.0, 1.0}, 0.25);
    Shape cap = Shape::csg_intersection({fixtures::unit_ball(2), hs});
    CHECK(cap.contains(Vec{0.0, 0.0}));
    CHECK(cap.contains(Vec{0.0, 0.25}));
    CHECK_FALSE(cap.contains(Vec{0.0, 0.5}));
    auto iv = cap.ray_intervals(Vec{0.0, 0.0}, Vec{0.0, 1.0}).intervals();
    REQUIRE(iv.size() == 1);
    CHECK(iv[0].hi == doctest::Approx(0.25).epsilon(1e-12));
}
