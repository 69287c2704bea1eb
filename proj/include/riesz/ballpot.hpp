#pragma once

#include <optional>
#include <string>

#include "riesz/quadrature.hpp"

namespace riesz {

// Closed-form regularized Riesz potential of the unit n-ball evaluated at
// x_t = t e1.  The |t| = 1, lambda <= 0 combination is outside the
// regularization scheme and is rejected.
struct BallPotentialQuery {
    int n;         // dimension, >= 2
    double lambda; // potential exponent parameter
    double t;      // signed distance of the evaluation point from the center

    BallPotentialQuery(int n_, double lambda_, double t_);
};

// Points with ||t|-1| below this are evaluated by the boundary closed form
// (lambda > 0) or rejected (lambda <= 0): the hypergeometric series loses
// precision as u -> 1 while the boundary form is exact.
inline constexpr double kBoundaryBand = 1e-8;

// V^{(lambda)}_{B^n}(t e1): hypergeometric forms for lambda != 0, explicit
// log forms for lambda = 0, gamma closed form on |t| = 1 (lambda > 0).
double ball_potential(const BallPotentialQuery& q);
double ball_potential(int n, double lambda, double t);

// dV/dt by term-wise differentiation of the closed form in force at t
// (chain rule through u = t^2 or u = 1/t^2); |t| != 1.
double ball_potential_derivative(const BallPotentialQuery& q);
double ball_potential_derivative(int n, double lambda, double t);

// d^2V/dt^2, same symbolic route (two applications of the series
// derivative rule, never finite differences).
double ball_potential_second_derivative(int n, double lambda, double t);

// Reflection in t:  V(t) = t^{lambda-n} [ V(1/t) + (1/lambda)(t - 1/t) V'(1/t) ].
// Requires lambda != 0 and |t| not in {0, 1}.
double reflect_in_t(int n, double lambda, double t);

// Reflection in lambda:  V^{(lambda)} = -(1-t^2)^lambda V^{(-lambda)} for
// |t| < 1 and (t^2-1)^lambda V^{(-lambda)} for |t| > 1.
double reflect_in_lambda(int n, double lambda, double t);

// Residual of t(1-t^2)V'' + (n-1+(2 lambda-n-1)t^2)V' - lambda(lambda-n)tV;
// zero up to rounding when the closed forms are correct.
double ode_residual(int n, double lambda, double t);

// Log potential of the unit ball, V^log(t) = -d/d lambda V^{(lambda)}(t) at
// lambda = n: central difference with h = 1e-5, Richardson-extrapolated
// with h and h/2.
double log_potential_ball(int n, double t);

// Elementary-function evaluation where available: lambda an even integer
// (terminating series, possibly through the lambda-reflection) or
// lambda = 0 (explicit log forms).  Empty otherwise.
struct ElementaryForm {
    std::string description;
    double value;
};
std::optional<ElementaryForm> elementary_form(int n, double lambda, double t);

} // namespace riesz
