#include "riesz/optim.hpp"

#include <algorithm>
#include <cmath>

namespace riesz {

NelderMeadResult nelder_mead_minimize(const std::function<double(const Vec&)>& f, const Vec& x0,
                                      double initial_step, double diameter_tol,
                                      int max_iterations) {
    const int n = x0.dim();
    std::vector<Vec> xs;
    std::vector<double> fs;
    xs.reserve(static_cast<std::size_t>(n) + 1);
    xs.push_back(x0);
    for (int i = 0; i < n; ++i) {
        Vec v = x0;
        v[i] += initial_step;
        xs.push_back(v);
    }
    fs.resize(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) fs[i] = f(xs[i]);

    auto order = [&] {
        std::vector<std::size_t> idx(xs.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
        std::vector<Vec> x2;
        std::vector<double> f2;
        x2.reserve(xs.size());
        f2.reserve(xs.size());
        for (std::size_t i : idx) {
            x2.push_back(xs[i]);
            f2.push_back(fs[i]);
        }
        xs.swap(x2);
        fs.swap(f2);
    };

    NelderMeadResult res;
    int it = 0;
    for (; it < max_iterations; ++it) {
        order();
        double diam = 0.0;
        for (std::size_t i = 1; i < xs.size(); ++i)
            diam = std::max(diam, (xs[i] - xs[0]).norm());
        if (diam < diameter_tol) {
            res.converged = true;
            break;
        }

        Vec c(n); // centroid of all but worst
        for (std::size_t i = 0; i + 1 < xs.size(); ++i) c += xs[i];
        c *= 1.0 / n;
        const std::size_t w = xs.size() - 1;

        Vec xr = c + 1.0 * (c - xs[w]);
        double fr = f(xr);
        if (fr < fs[0]) {
            Vec xe = c + 2.0 * (xr - c);
            double fe = f(xe);
            if (fe < fr) {
                xs[w] = xe;
                fs[w] = fe;
            } else {
                xs[w] = xr;
                fs[w] = fr;
            }
        } else if (fr < fs[w - 1]) {
            xs[w] = xr;
            fs[w] = fr;
        } else {
            bool outside = fr < fs[w];
            Vec xc = outside ? c + 0.5 * (xr - c) : c + 0.5 * (xs[w] - c);
            double fc = f(xc);
            if (fc < std::min(fr, fs[w])) {
                xs[w] = xc;
                fs[w] = fc;
            } else {
                for (std::size_t i = 1; i < xs.size(); ++i) {
                    xs[i] = xs[0] + 0.5 * (xs[i] - xs[0]);
                    fs[i] = f(xs[i]);
                }
            }
        }
    }
    order();
    res.x = xs[0];
    res.fx = fs[0];
    res.iterations = it;
    return res;
}

std::optional<Vec> newton_ascent_step(const std::vector<double>& H, const Vec& g) {
    const int n = g.dim();
    // Cholesky of A = -H
    std::vector<double> L(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    auto a = [&](int i, int j) { return -H[static_cast<std::size_t>(i * n + j)]; };
    auto l = [&](int i, int j) -> double& { return L[static_cast<std::size_t>(i * n + j)]; };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = a(i, j);
            for (int k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            if (i == j) {
                if (s <= 0.0) return std::nullopt;
                l(i, j) = std::sqrt(s);
            } else {
                l(i, j) = s / l(j, j);
            }
        }
    }
    // forward/back substitution: A s = g
    Vec y(n);
    for (int i = 0; i < n; ++i) {
        double s = g[i];
        for (int k = 0; k < i; ++k) s -= l(i, k) * y[k];
        y[i] = s / l(i, i);
    }
    Vec s(n);
    for (int i = n - 1; i >= 0; --i) {
        double v = y[i];
        for (int k = i + 1; k < n; ++k) v -= l(k, i) * s[k];
        s[i] = v / l(i, i);
    }
    return s;
}

Vec halton_point(std::size_t index, int dim) {
    static constexpr int primes[Vec::kMaxDim] = {2, 3, 5, 7, 11, 13, 17, 19};
    Vec p(dim);
    for (int d = 0; d < dim; ++d) {
        double f = 1.0, r = 0.0;
        std::size_t i = index + 1;
        int base = primes[d];
        while (i > 0) {
            f /= base;
            r += f * static_cast<double>(i % static_cast<std::size_t>(base));
            i /= static_cast<std::size_t>(base);
        }
        p[d] = r;
    }
    return p;
}

} // namespace riesz
