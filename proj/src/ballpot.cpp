#include "riesz/ballpot.hpp"

#include <cmath>

#include "riesz/errors.hpp"
#include "riesz/specfun.hpp"

namespace riesz {

namespace {

bool on_boundary(double t) { return std::fabs(std::fabs(t) - 1.0) < kBoundaryBand; }

void check_dim(int n) {
    if (n < 2) throw validation_error("ball potential: dimension must be >= 2");
}

HypergeomParams inside_params(int n, double lambda) {
    return HypergeomParams(-lambda / 2.0, -(lambda - n) / 2.0, n / 2.0);
}

HypergeomParams outside_params(int n, double lambda) {
    return HypergeomParams(-lambda / 2.0 + 1.0, -(lambda - n) / 2.0, n / 2.0 + 1.0);
}

double boundary_value(int n, double lambda) {
    // V(1) = 2^lambda / lambda * Gamma((lambda+1)/2) / Gamma((lambda+n)/2) * pi^{(n-1)/2}
    return std::pow(2.0, lambda) / lambda * gamma_fn((lambda + 1.0) / 2.0) /
           gamma_fn((lambda + n) / 2.0) * std::pow(M_PI, (n - 1.0) / 2.0);
}

// lambda = 0 log forms.  The |t| > 1 expressions integrate the series
// sigma * sum_j t^{-(n+2j)} / (n+2j); for even n that fixes the sign of the
// log term as -log(1 - t^{-2}) / 2.
double log_case_value(int n, double t) {
    double sigma = sphere_area(n);
    if (t < 1.0) return sigma * std::log(std::sqrt(1.0 - t * t));
    if (n % 2 == 1) {
        double s = 0.0;
        for (int j = 1; j <= (n - 1) / 2; ++j) s += std::pow(t, 1.0 - 2.0 * j) / (2.0 * j - 1.0);
        return sigma * (0.5 * std::log((t + 1.0) / (t - 1.0)) - s);
    }
    double s = 0.0;
    for (int j = 1; j <= n / 2 - 1; ++j) s += std::pow(t, -2.0 * j) / (2.0 * j);
    return sigma * (-0.5 * std::log(1.0 - 1.0 / (t * t)) - s);
}

double log_case_derivative(int n, double t) {
    double sigma = sphere_area(n);
    if (t < 1.0) return -sigma * t / (1.0 - t * t);
    // (V0/sigma)' = -t^{1-n} / (t^2 - 1) for both parities
    return -sigma * std::pow(t, 1.0 - n) / (t * t - 1.0);
}

double log_case_second_derivative(int n, double t) {
    double sigma = sphere_area(n);
    if (t < 1.0) {
        double d = 1.0 - t * t;
        return -sigma * (1.0 + t * t) / (d * d);
    }
    double d = t * t - 1.0;
    return -sigma * ((1.0 - n) * std::pow(t, -static_cast<double>(n)) * d -
                     std::pow(t, 1.0 - n) * 2.0 * t) /
           (d * d);
}

} // namespace

BallPotentialQuery::BallPotentialQuery(int n_, double lambda_, double t_)
    : n(n_), lambda(lambda_), t(t_) {
    check_dim(n);
    if (on_boundary(t) && lambda <= 0.0)
        throw validation_error(
            "ball potential: |t| = 1 with lambda <= 0 is outside the regularization scheme");
}

double ball_potential(const BallPotentialQuery& q) {
    return ball_potential(q.n, q.lambda, q.t);
}

double ball_potential(int n, double lambda, double t) {
    check_dim(n);
    t = std::fabs(t); // V(-t) = V(t)
    double sigma = sphere_area(n);
    if (on_boundary(t)) {
        if (lambda <= 0.0)
            throw validation_error(
                "ball potential: |t| = 1 with lambda <= 0 is outside the regularization scheme");
        return boundary_value(n, lambda);
    }
    if (lambda == 0.0) return log_case_value(n, t);
    if (t < 1.0) return sigma / lambda * hyp2f1(inside_params(n, lambda), t * t);
    return sigma / n * std::pow(t, lambda - n) *
           hyp2f1(outside_params(n, lambda), 1.0 / (t * t));
}

double ball_potential_derivative(const BallPotentialQuery& q) {
    return ball_potential_derivative(q.n, q.lambda, q.t);
}

double ball_potential_derivative(int n, double lambda, double t) {
    check_dim(n);
    if (on_boundary(t))
        throw validation_error("ball potential derivative: undefined on |t| = 1");
    double sign = t < 0.0 ? -1.0 : 1.0; // V even => V' odd
    t = std::fabs(t);
    if (t == 0.0) return 0.0;
    double sigma = sphere_area(n);
    if (lambda == 0.0) return sign * log_case_derivative(n, t);
    if (t < 1.0) {
        auto p = inside_params(n, lambda);
        return sign * sigma / lambda * 2.0 * t * hyp2f1_derivative(p, t * t);
    }
    auto p = outside_params(n, lambda);
    double w = 1.0 / (t * t);
    double g = hyp2f1(p, w);
    double gp = hyp2f1_derivative(p, w);
    return sign * sigma / n *
           ((lambda - n) * std::pow(t, lambda - n - 1.0) * g -
            2.0 * std::pow(t, lambda - n - 3.0) * gp);
}

double ball_potential_second_derivative(int n, double lambda, double t) {
    check_dim(n);
    if (on_boundary(t))
        throw validation_error("ball potential second derivative: undefined on |t| = 1");
    t = std::fabs(t); // V even => V'' even
    double sigma = sphere_area(n);
    if (lambda == 0.0) return log_case_second_derivative(n, t);
    if (t < 1.0) {
        auto p = inside_params(n, lambda);
        double u = t * t;
        double fp = hyp2f1_derivative(p, u);
        double fpp = p.a * p.b / p.c *
                     hyp2f1_derivative(HypergeomParams(p.a + 1.0, p.b + 1.0, p.c + 1.0), u);
        return sigma / lambda * (2.0 * fp + 4.0 * u * fpp);
    }
    auto p = outside_params(n, lambda);
    double w = 1.0 / (t * t);
    double g = hyp2f1(p, w);
    double gp = hyp2f1_derivative(p, w);
    double gpp =
        p.a * p.b / p.c * hyp2f1_derivative(HypergeomParams(p.a + 1.0, p.b + 1.0, p.c + 1.0), w);
    double m = lambda - n;
    return sigma / n *
           (m * (m - 1.0) * std::pow(t, m - 2.0) * g -
            2.0 * (2.0 * m - 3.0) * std::pow(t, m - 4.0) * gp +
            4.0 * std::pow(t, m - 6.0) * gpp);
}

double reflect_in_t(int n, double lambda, double t) {
    check_dim(n);
    if (lambda == 0.0) throw validation_error("reflect_in_t: lambda must be nonzero");
    t = std::fabs(t);
    if (t == 0.0 || on_boundary(t))
        throw validation_error("reflect_in_t: |t| must differ from 0 and 1");
    double s = 1.0 / t;
    double v = ball_potential(n, lambda, s);
    double vp = ball_potential_derivative(n, lambda, s);
    return std::pow(t, lambda - n) * (v + (t - s) / lambda * vp);
}

double reflect_in_lambda(int n, double lambda, double t) {
    check_dim(n);
    if (lambda == 0.0) throw validation_error("reflect_in_lambda: lambda must be nonzero");
    t = std::fabs(t);
    if (on_boundary(t)) throw validation_error("reflect_in_lambda: |t| must differ from 1");
    double mirror = ball_potential(n, -lambda, t);
    if (t < 1.0) return -std::pow(1.0 - t * t, lambda) * mirror;
    return std::pow(t * t - 1.0, lambda) * mirror;
}

double ode_residual(int n, double lambda, double t) {
    check_dim(n);
    if (lambda == 0.0) throw validation_error("ode_residual: lambda must be nonzero");
    if (on_boundary(t)) throw validation_error("ode_residual: |t| must differ from 1");
    t = std::fabs(t);
    double v = ball_potential(n, lambda, t);
    double vp = ball_potential_derivative(n, lambda, t);
    double vpp = ball_potential_second_derivative(n, lambda, t);
    return t * (1.0 - t * t) * vpp + (n - 1.0 + (2.0 * lambda - n - 1.0) * t * t) * vp -
           lambda * (lambda - n) * t * v;
}

double log_potential_ball(int n, double t) {
    check_dim(n);
    if (on_boundary(t)) throw validation_error("log_potential_ball: |t| must differ from 1");
    t = std::fabs(t);
    auto central = [&](double h) {
        return (ball_potential(n, n + h, t) - ball_potential(n, n - h, t)) / (2.0 * h);
    };
    const double h = 1e-5;
    double d_h = central(h);
    double d_h2 = central(h / 2.0);
    // O(h^2) error term eliminated
    return -(4.0 * d_h2 - d_h) / 3.0;
}

std::optional<ElementaryForm> elementary_form(int n, double lambda, double t) {
    check_dim(n);
    t = std::fabs(t);
    if (on_boundary(t)) return std::nullopt;
    if (lambda == 0.0) {
        std::string desc = t < 1.0              ? "interior log form"
                           : (n % 2 == 1)       ? "odd-n log form"
                                                : "even-n log form";
        return ElementaryForm{desc, log_case_value(n, t)};
    }
    double half = lambda / 2.0;
    bool even_integer = std::fabs(half - std::round(half)) < 1e-12;
    if (!even_integer) return std::nullopt;
    if (lambda > 0.0) {
        // -lambda/2 is a negative integer: the series terminates exactly.
        std::string desc = t < 1.0 ? "polynomial in t^2" : "rational in t";
        return ElementaryForm{desc, ball_potential(n, lambda, t)};
    }
    // negative even lambda: map to the terminating mirror case
    return ElementaryForm{"lambda-reflection of terminating series",
                          reflect_in_lambda(n, lambda, t)};
}

} // namespace riesz
