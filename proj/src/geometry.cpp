#include "riesz/geometry.hpp"

#include <algorithm>

namespace riesz {

void IntervalSet::normalize() const {
    if (normalized_) return;
    std::sort(raw_.begin(), raw_.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::vector<Interval> out;
    out.reserve(raw_.size());
    for (const auto& iv : raw_) {
        if (!out.empty() && iv.lo <= out.back().hi + kMergeEps) {
            out.back().hi = std::max(out.back().hi, iv.hi);
        } else {
            out.push_back(iv);
        }
    }
    raw_ = std::move(out);
    normalized_ = true;
}

IntervalSet IntervalSet::set_union(const IntervalSet& a, const IntervalSet& b) {
    IntervalSet r;
    for (const auto& iv : a.intervals()) r.add(iv.lo, iv.hi);
    for (const auto& iv : b.intervals()) r.add(iv.lo, iv.hi);
    return r;
}

IntervalSet IntervalSet::set_intersection(const IntervalSet& a, const IntervalSet& b) {
    IntervalSet r;
    const auto& xs = a.intervals();
    const auto& ys = b.intervals();
    std::size_t i = 0, j = 0;
    while (i < xs.size() && j < ys.size()) {
        double lo = std::max(xs[i].lo, ys[j].lo);
        double hi = std::min(xs[i].hi, ys[j].hi);
        if (hi - lo > kMergeEps) r.add(lo, hi);
        if (xs[i].hi < ys[j].hi)
            ++i;
        else
            ++j;
    }
    return r;
}

IntervalSet IntervalSet::set_difference(const IntervalSet& a, const IntervalSet& b) {
    IntervalSet r;
    const auto& ys = b.intervals();
    for (const auto& x : a.intervals()) {
        double cur = x.lo;
        for (const auto& y : ys) {
            if (y.hi <= cur) continue;
            if (y.lo >= x.hi) break;
            if (y.lo > cur) r.add(cur, std::min(y.lo, x.hi));
            cur = std::max(cur, y.hi);
            if (cur >= x.hi) break;
        }
        if (cur < x.hi) r.add(cur, x.hi);
    }
    return r;
}

} // namespace riesz
