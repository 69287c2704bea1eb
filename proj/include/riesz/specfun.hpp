#pragma once

#include "riesz/errors.hpp"

namespace riesz {

// Parameters of the Gauss hypergeometric series 2F1(a,b;c;u).
// c must not be zero or a negative integer.
struct HypergeomParams {
    double a;
    double b;
    double c;

    HypergeomParams(double a_, double b_, double c_);
};

// Gamma function, Lanczos approximation (g=7, 9 terms) with reflection for
// z < 0.5.  Relative error well below 1e-13 on [0.5, 50].
double gamma_fn(double z);

// Rising factorial (p)_k = p (p+1) ... (p+k-1), (p)_0 = 1.
double pochhammer(double p, int k);

// Gauss hypergeometric series.  Domain: |u| < 1, or u = 1 with c-a-b > 0,
// or a terminating series (a or b a non-positive integer).  At u = 1 the
// value comes from Gauss's summation theorem, never from the series.
double hyp2f1(const HypergeomParams& p, double u);

// d/du 2F1(a,b;c;u) = (ab/c) 2F1(a+1,b+1;c+1;u).
double hyp2f1_derivative(const HypergeomParams& p, double u);

namespace detail {
// True when x is within tol of a non-positive integer.
bool is_nonpositive_integer(double x, double tol = 1e-12);
} // namespace detail

} // namespace riesz
