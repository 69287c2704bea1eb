#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "riesz/errors.hpp"

namespace riesz {

// Point/direction in R^n, n in [2, kMaxDim].  Inline storage keeps the
// ray-casting hot path free of allocations.
class Vec {
public:
    static constexpr int kMaxDim = 8;

    Vec() : n_(0) { a_.fill(0.0); }
    explicit Vec(int n) : n_(check_dim(n)) { a_.fill(0.0); }
    Vec(std::initializer_list<double> xs) : n_(check_dim(static_cast<int>(xs.size()))) {
        a_.fill(0.0);
        int i = 0;
        for (double x : xs) a_[i++] = x;
    }
    explicit Vec(const std::vector<double>& xs) : n_(check_dim(static_cast<int>(xs.size()))) {
        a_.fill(0.0);
        for (int i = 0; i < n_; ++i) a_[i] = xs[static_cast<std::size_t>(i)];
    }

    int dim() const { return n_; }
    double operator[](int i) const { return a_[static_cast<std::size_t>(i)]; }
    double& operator[](int i) { return a_[static_cast<std::size_t>(i)]; }

    Vec& operator+=(const Vec& o) {
        for (int i = 0; i < n_; ++i) a_[static_cast<std::size_t>(i)] += o[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        for (int i = 0; i < n_; ++i) a_[static_cast<std::size_t>(i)] -= o[i];
        return *this;
    }
    Vec& operator*=(double s) {
        for (int i = 0; i < n_; ++i) a_[static_cast<std::size_t>(i)] *= s;
        return *this;
    }

    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(double s, Vec a) { return a *= s; }
    friend Vec operator*(Vec a, double s) { return a *= s; }
    friend Vec operator/(Vec a, double s) { return a *= 1.0 / s; }

    double dot(const Vec& o) const {
        double s = 0.0;
        for (int i = 0; i < n_; ++i) s += a_[static_cast<std::size_t>(i)] * o[i];
        return s;
    }
    double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }

    std::vector<double> to_vector() const {
        return std::vector<double>(a_.begin(), a_.begin() + n_);
    }

    static Vec unit(int n, int axis) {
        Vec v(n);
        v[axis] = 1.0;
        return v;
    }

private:
    static int check_dim(int n) {
        if (n < 1 || n > kMaxDim)
            throw validation_error("vector dimension out of range [1," +
                                   std::to_string(kMaxDim) + "]: " + std::to_string(n));
        return n;
    }

    std::array<double, kMaxDim> a_;
    int n_;
};

inline double dist(const Vec& a, const Vec& b) { return (a - b).norm(); }

// One radial interval of a ray/shape intersection, 0 <= lo < hi < inf.
struct Interval {
    double lo;
    double hi;
};

// Sorted disjoint intervals on the nonnegative ray parameter axis.
// Endpoints closer than kMergeEps are merged so boolean ops cannot leave
// sliver intervals behind.
class IntervalSet {
public:
    static constexpr double kMergeEps = 1e-12;

    IntervalSet() = default;

    void add(double lo, double hi) {
        if (!(hi - lo > kMergeEps)) return;
        raw_.push_back({lo, hi});
        normalized_ = false;
    }

    const std::vector<Interval>& intervals() const {
        normalize();
        return raw_;
    }
    bool empty() const { return intervals().empty(); }
    std::size_t size() const { return intervals().size(); }

    bool member(double t) const {
        for (const auto& iv : intervals())
            if (t >= iv.lo && t <= iv.hi) return true;
        return false;
    }

    static IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
    static IntervalSet set_intersection(const IntervalSet& a, const IntervalSet& b);
    // a minus b (closed-set semantics up to kMergeEps slivers)
    static IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b);

    IntervalSet scaled(double k) const {
        IntervalSet r;
        for (const auto& iv : intervals()) r.add(k * iv.lo, k * iv.hi);
        return r;
    }

private:
    void normalize() const;

    mutable std::vector<Interval> raw_;
    mutable bool normalized_ = true;
};

} // namespace riesz
