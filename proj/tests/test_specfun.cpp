#include <doctest.h>

#include <cmath>
#include <random>

#include "riesz/errors.hpp"
#include "riesz/specfun.hpp"

#include "oracles.hpp"

using namespace riesz;

TEST_CASE("gamma known values") {
    CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-13));
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-13));
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(gamma_fn(10.5) == doctest::Approx(1133278.3889487855673).epsilon(1e-12));
}

TEST_CASE("gamma duplication formula at z=1.3") {
    double z = 1.3;
    double lhs = std::sqrt(M_PI) * gamma_fn(2.0 * z);
    double rhs = std::pow(2.0, 2.0 * z - 1.0) * gamma_fn(z) * gamma_fn(z + 0.5);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("gamma recurrence on [0.5, 30]") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> z(0.5, 30.0);
    for (int i = 0; i < 200; ++i) {
        double zi = z(rng);
        CHECK(gamma_fn(zi + 1.0) == doctest::Approx(zi * gamma_fn(zi)).epsilon(1e-12));
    }
}

TEST_CASE("gamma reflection below 0.5 and poles") {
    CHECK(gamma_fn(-0.5) == doctest::Approx(-2.0 * std::sqrt(M_PI)).epsilon(1e-12));
    CHECK_THROWS_AS(gamma_fn(0.0), validation_error);
    CHECK_THROWS_AS(gamma_fn(-3.0), validation_error);
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(3.0, 0) == 1.0);
    CHECK(pochhammer(2.0, 3) == 24.0);
    CHECK(pochhammer(-1.5, 2) == doctest::Approx(0.75));
}

TEST_CASE("hyp2f1 basic values") {
    CHECK(hyp2f1(HypergeomParams(1.7, -2.3, 0.9), 0.0) == 1.0);
    // terminating: F(-1,2;4;u) = 1 - u/2
    CHECK(hyp2f1(HypergeomParams(-1.0, 2.0, 4.0), 0.5) == doctest::Approx(0.75).epsilon(1e-15));
    // F(1,b;b;u) = (1-u)^{-1}
    CHECK(hyp2f1(HypergeomParams(1.0, 2.0, 2.0), 0.25) ==
          doctest::Approx(1.0 / 0.75).epsilon(1e-14));
}

TEST_CASE("hyp2f1 at u=1 uses Gauss's theorem") {
    HypergeomParams p(-1.0, -0.5, 1.5);
    double gauss = gamma_fn(1.5) * gamma_fn(3.0) / (gamma_fn(2.5) * gamma_fn(2.0));
    CHECK(hyp2f1(p, 1.0) == doctest::Approx(gauss).epsilon(1e-13));
    // cross-check against direct summation just inside the disk
    CHECK(hyp2f1(p, 1.0 - 1e-6) == doctest::Approx(gauss).epsilon(1e-5));

    // divergent: c - a - b = -0.5 <= 0, non-terminating
    CHECK_THROWS_AS(hyp2f1(HypergeomParams(0.5, 1.0, 1.0), 1.0), numerical_error);
}

TEST_CASE("hyp2f1 domain errors") {
    CHECK_THROWS_AS(hyp2f1(HypergeomParams(0.5, 1.0, 1.0), 1.5), validation_error);
    CHECK_THROWS_AS(HypergeomParams(0.5, 1.0, -2.0), validation_error);
    CHECK_THROWS_AS(HypergeomParams(0.5, 1.0, 0.0), validation_error);
    // a terminating series is a polynomial: fine outside the disk
    CHECK(hyp2f1(HypergeomParams(-1.0, 2.0, 4.0), 3.0) ==
          doctest::Approx(-0.5).epsilon(1e-14));
}

TEST_CASE("terminating series is an exact polynomial") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(-0.9, 0.9);
    std::uniform_real_distribution<double> B(-3.0, 3.0);
    for (int rep = 0; rep < 50; ++rep) {
        double b = B(rng), c = 0.7 + std::fabs(B(rng)), u = U(rng);
        int m = 3; // a = -3
        double expect = 0.0;
        for (int k = 0; k <= m; ++k)
            expect += pochhammer(-3.0, k) * pochhammer(b, k) /
                      (pochhammer(1.0, k) * pochhammer(c, k)) * std::pow(u, k);
        CHECK(hyp2f1(HypergeomParams(-3.0, b, c), u) ==
              doctest::Approx(expect).epsilon(1e-13));
    }
}

TEST_CASE("hyp2f1_derivative") {
    CHECK(hyp2f1_derivative(HypergeomParams(0.0, 1.3, 2.1), 0.3) == 0.0);
    // derivative of 1 - u/2
    CHECK(hyp2f1_derivative(HypergeomParams(-1.0, 2.0, 4.0), 0.7) ==
          doctest::Approx(-0.5).epsilon(1e-14));
    // finite-difference oracle
    HypergeomParams p(1.0, 1.0, 2.0);
    double fd = oracle::central_diff([&](double u) { return hyp2f1(p, u); }, 0.5, 1e-6);
    CHECK(hyp2f1_derivative(p, 0.5) == doctest::Approx(fd).epsilon(1e-6));
}

TEST_CASE("series solves the hypergeometric differential equation") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> AB(-4.0, 4.0);
    std::uniform_real_distribution<double> C(0.5, 6.0);
    for (int rep = 0; rep < 20; ++rep) {
        double a = AB(rng), b = AB(rng), c = C(rng);
        HypergeomParams p(a, b, c);
        HypergeomParams p1(a + 1.0, b + 1.0, c + 1.0);
        for (double u = 0.1; u < 0.95; u += 0.1) {
            double w = hyp2f1(p, u);
            double wp = hyp2f1_derivative(p, u);
            double wpp = (a * b / c) * hyp2f1_derivative(p1, u);
            double residual = u * (1.0 - u) * wpp + (c - (a + b + 1.0) * u) * wp - a * b * w;
            double scale = std::max({1.0, std::fabs(a * b * w), std::fabs(wp)});
            CHECK(std::fabs(residual) <= 1e-8 * scale);
        }
    }
}
