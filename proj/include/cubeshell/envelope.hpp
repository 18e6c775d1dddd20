#pragma once

// Continuous piecewise-linear functions on a closed interval and their
// pointwise minimum, used for the planar problem where the center domain
// is a segment.

#include "cubeshell/scalar.hpp"

#include <utility>
#include <vector>

namespace cubeshell {

/// Graph through (xs[i], ys[i]) with xs strictly increasing; linear between.
struct PiecewiseLinear {
    std::vector<Scalar> xs, ys;

    Scalar operator()(const Scalar& x) const {
        if (x < xs.front() || x > xs.back()) throw UsageError("PiecewiseLinear: argument outside the domain");
        auto it = std::lower_bound(xs.begin(), xs.end(), x);
        std::size_t i = static_cast<std::size_t>(it - xs.begin());
        if (xs[i] == x) return ys[i];
        return ys[i - 1] + (ys[i] - ys[i - 1]) * (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
    }
};

/// max(|x - a|, z) on [lo, hi].
inline PiecewiseLinear plateau_function(const Scalar& a, const Scalar& z, const Scalar& lo, const Scalar& hi) {
    if (lo > hi) throw UsageError("plateau_function: empty domain");
    PiecewiseLinear f;
    f.xs.push_back(lo);
    for (Scalar x : {Scalar(a - z), Scalar(a + z)})
        if (lo < x && x < hi && x != f.xs.back()) f.xs.push_back(x);
    if (hi != lo) f.xs.push_back(hi);
    for (const auto& x : f.xs) f.ys.push_back(std::max(abs_of(x - a), z));
    return f;
}

namespace detail {

inline void drop_collinear(PiecewiseLinear& f) {
    if (f.xs.size() < 3) return;
    PiecewiseLinear g;
    g.xs.push_back(f.xs[0]);
    g.ys.push_back(f.ys[0]);
    for (std::size_t i = 1; i + 1 < f.xs.size(); ++i) {
        const Scalar& x0 = g.xs.back();
        const Scalar& y0 = g.ys.back();
        // Same slope on both sides of xs[i]?
        if ((f.ys[i] - y0) * (f.xs[i + 1] - f.xs[i]) == (f.ys[i + 1] - f.ys[i]) * (f.xs[i] - x0)) continue;
        g.xs.push_back(f.xs[i]);
        g.ys.push_back(f.ys[i]);
    }
    g.xs.push_back(f.xs.back());
    g.ys.push_back(f.ys.back());
    f = std::move(g);
}

}  // namespace detail

/// Pointwise minimum of two functions sharing one domain.
inline PiecewiseLinear min_of(const PiecewiseLinear& f, const PiecewiseLinear& g) {
    if (f.xs.front() != g.xs.front() || f.xs.back() != g.xs.back())
        throw PreconditionError("min_of: functions must share a domain");
    std::vector<Scalar> xs;
    xs.reserve(f.xs.size() + g.xs.size());
    std::merge(f.xs.begin(), f.xs.end(), g.xs.begin(), g.xs.end(), std::back_inserter(xs));
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    // Values of both at every merged breakpoint, by a two-pointer walk.
    std::vector<Scalar> fv(xs.size()), gv(xs.size());
    auto sample = [&](const PiecewiseLinear& h, std::vector<Scalar>& out) {
        std::size_t k = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            while (h.xs[k] < xs[i]) ++k;
            out[i] = h.xs[k] == xs[i] ? h.ys[k]
                                      : h.ys[k - 1] + (h.ys[k] - h.ys[k - 1]) * (xs[i] - h.xs[k - 1]) /
                                                          (h.xs[k] - h.xs[k - 1]);
        }
    };
    sample(f, fv);
    sample(g, gv);

    PiecewiseLinear out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out.xs.push_back(xs[i]);
        out.ys.push_back(std::min(fv[i], gv[i]));
        if (i + 1 == xs.size()) break;
        Scalar d0 = fv[i] - gv[i], d1 = fv[i + 1] - gv[i + 1];
        if (sgn(d0) * sgn(d1) < 0) {
            Scalar t = d0 / (d0 - d1);
            out.xs.push_back(xs[i] + (xs[i + 1] - xs[i]) * t);
            out.ys.push_back(fv[i] + (fv[i + 1] - fv[i]) * t);
        }
    }
    detail::drop_collinear(out);
    return out;
}

/// Lower envelope of a nonempty family by divide and conquer.
inline PiecewiseLinear lower_envelope(const std::vector<PiecewiseLinear>& fs) {
    if (fs.empty()) throw UsageError("lower_envelope: no functions");
    auto rec = [&](auto&& self, std::size_t lo, std::size_t hi) -> PiecewiseLinear {
        if (hi - lo == 1) return fs[lo];
        std::size_t mid = (lo + hi) / 2;
        return min_of(self(self, lo, mid), self(self, mid, hi));
    };
    return rec(rec, 0, fs.size());
}

/// Largest value of f and the leftmost point attaining it.
inline std::pair<Scalar, Scalar> max_of(const PiecewiseLinear& f) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < f.ys.size(); ++i)
        if (f.ys[i] > f.ys[best]) best = i;
    return {f.ys[best], f.xs[best]};
}

}  // namespace cubeshell
