// Test-only oracles, independent of the library's evaluation paths:
// finite differences, Monte Carlo volume integrals, and brute-force polar
// quadrature.  Expected values asserted in the suites are computed (or were
// frozen from) these.
#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <utility>

#include "riesz/geometry.hpp"

namespace oracle {

inline double central_diff(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

inline double second_diff(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

inline riesz::Vec central_gradient(const std::function<double(const riesz::Vec&)>& f,
                                   const riesz::Vec& x, double h) {
    riesz::Vec g(x.dim());
    for (int i = 0; i < x.dim(); ++i) {
        riesz::Vec a = x, b = x;
        a[i] += h;
        b[i] -= h;
        g[i] = (f(a) - f(b)) / (2.0 * h);
    }
    return g;
}

inline std::vector<double> central_hessian(const std::function<double(const riesz::Vec&)>& f,
                                           const riesz::Vec& x, double h) {
    int n = x.dim();
    std::vector<double> H(static_cast<std::size_t>(n) * n);
    double f0 = f(x);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double v;
            if (i == j) {
                riesz::Vec a = x, b = x;
                a[i] += h;
                b[i] -= h;
                v = (f(a) - 2.0 * f0 + f(b)) / (h * h);
            } else {
                riesz::Vec pp = x, pm = x, mp = x, mm = x;
                pp[i] += h;
                pp[j] += h;
                pm[i] += h;
                pm[j] -= h;
                mp[i] -= h;
                mp[j] += h;
                mm[i] -= h;
                mm[j] -= h;
                v = (f(pp) - f(pm) - f(mp) + f(mm)) / (4.0 * h * h);
            }
            H[static_cast<std::size_t>(i * n + j)] = v;
            H[static_cast<std::size_t>(j * n + i)] = v;
        }
    return H;
}

// Volume of the unit n-ball.
inline double unit_ball_volume(int n) {
    double v = 1.0; // V_0
    // V_n = V_{n-2} * 2 pi / n
    if (n % 2 == 0) {
        for (int k = 2; k <= n; k += 2) v *= 2.0 * M_PI / k;
    } else {
        v = 2.0; // V_1
        for (int k = 3; k <= n; k += 2) v *= 2.0 * M_PI / k;
    }
    return v;
}

// Monte Carlo integral of f over the unit n-ball: mean and standard error.
inline std::pair<double, double> mc_unit_ball(const std::function<double(const riesz::Vec&)>& f,
                                              int n, std::size_t samples,
                                              std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double sum = 0.0, sum2 = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
        riesz::Vec v(n);
        double nrm;
        do {
            for (int i = 0; i < n; ++i) v[i] = gauss(rng);
            nrm = v.norm();
        } while (nrm < 1e-12);
        double r = std::pow(unif(rng), 1.0 / n);
        double val = f(v * (r / nrm));
        sum += val;
        sum2 += val * val;
    }
    double m = static_cast<double>(samples);
    double mean = sum / m;
    double var = (sum2 / m - mean * mean) / (m - 1.0);
    double vol = unit_ball_volume(n);
    return {vol * mean, vol * std::sqrt(std::max(var, 0.0))};
}

// Midpoint polar quadrature of f over the unit disk (independent of the
// engine's per-ray antiderivatives: plain f(y) * area element sums).
inline double disk_quadrature(const std::function<double(const riesz::Vec&)>& f, int nr,
                              int ntheta) {
    double sum = 0.0;
    for (int i = 0; i < nr; ++i) {
        double r = (i + 0.5) / nr;
        for (int j = 0; j < ntheta; ++j) {
            double th = 2.0 * M_PI * (j + 0.5) / ntheta;
            sum += f(riesz::Vec{r * std::cos(th), r * std::sin(th)}) * r;
        }
    }
    return sum * (1.0 / nr) * (2.0 * M_PI / ntheta);
}

} // namespace oracle
