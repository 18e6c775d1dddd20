#pragma once

// Points, the L-infinity metric, bounding boxes, normalization onto the
// halving plane, and the domain of centers of smallest enclosing cubes.

#include "cubeshell/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <utility>
#include <vector>

namespace cubeshell {

class Point {
public:
    Point() = default;
    explicit Point(std::vector<Scalar> coords) : coords_(std::move(coords)) {}
    Point(std::initializer_list<Scalar> coords) : coords_(coords) {}

    std::size_t dim() const noexcept { return coords_.size(); }
    const Scalar& operator[](std::size_t i) const { return coords_[i]; }
    Scalar& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Scalar>& coords() const noexcept { return coords_; }

    friend bool operator==(const Point& a, const Point& b) { return a.coords_ == b.coords_; }
    friend bool operator<(const Point& a, const Point& b) { return a.coords_ < b.coords_; }

private:
    std::vector<Scalar> coords_;
};

/// Nonempty list of points sharing one dimension.
class PointSet {
public:
    explicit PointSet(std::vector<Point> points) : points_(std::move(points)) {
        if (points_.empty()) throw UsageError("point set is empty");
        dim_ = points_.front().dim();
        if (dim_ == 0) throw UsageError("points must have at least one coordinate");
        for (const auto& p : points_)
            if (p.dim() != dim_) throw UsageError("points of mixed dimension");
    }

    std::size_t size() const noexcept { return points_.size(); }
    std::size_t dim() const noexcept { return dim_; }
    const Point& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<Point>& points() const noexcept { return points_; }
    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

private:
    std::vector<Point> points_;
    std::size_t dim_ = 0;
};

inline Scalar linf_dist(const Point& p, const Point& q) {
    if (p.dim() != q.dim()) throw UsageError("linf_dist: dimension mismatch");
    Scalar best = 0;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        Scalar d = abs_of(p[i] - q[i]);
        if (d > best) best = d;
    }
    return best;
}

struct Interval {
    Scalar lo, hi;

    Scalar length() const { return hi - lo; }
    Scalar mid() const { return half(lo + hi); }
    bool contains(const Scalar& x) const { return lo <= x && x <= hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Product of closed intervals; any axis may be degenerate.
class Box {
public:
    Box() = default;
    explicit Box(std::vector<Interval> axes) : axes_(std::move(axes)) {
        for (const auto& a : axes_)
            if (a.lo > a.hi) throw PreconditionError("box interval with lo > hi");
    }

    std::size_t dim() const noexcept { return axes_.size(); }
    const Interval& operator[](std::size_t i) const { return axes_[i]; }
    const std::vector<Interval>& axes() const noexcept { return axes_; }

    Scalar longest_side() const {
        Scalar h = 0;
        for (const auto& a : axes_) h = std::max(h, a.length());
        return h;
    }

    /// Lowest index among the axes of maximal extent.
    std::size_t longest_axis() const {
        std::size_t best = 0;
        for (std::size_t i = 1; i < axes_.size(); ++i)
            if (axes_[i].length() > axes_[best].length()) best = i;
        return best;
    }

    std::size_t degenerate_axes() const {
        return static_cast<std::size_t>(
            std::count_if(axes_.begin(), axes_.end(), [](const Interval& a) { return a.lo == a.hi; }));
    }

    bool contains(const Point& p) const {
        if (p.dim() != dim()) throw UsageError("Box::contains: dimension mismatch");
        for (std::size_t i = 0; i < dim(); ++i)
            if (!axes_[i].contains(p[i])) return false;
        return true;
    }

    /// All 2^dim corners (duplicates kept for degenerate axes), lexicographic in (lo, hi) choices.
    std::vector<Point> corners() const {
        std::vector<Point> out;
        std::size_t count = std::size_t{1} << dim();
        out.reserve(count);
        for (std::size_t mask = 0; mask < count; ++mask) {
            std::vector<Scalar> c(dim());
            for (std::size_t i = 0; i < dim(); ++i) c[i] = (mask >> i & 1) ? axes_[i].hi : axes_[i].lo;
            out.emplace_back(std::move(c));
        }
        return out;
    }

    friend bool operator==(const Box&, const Box&) = default;

private:
    std::vector<Interval> axes_;
};

inline Box smallest_enclosing_box(const PointSet& P) {
    std::vector<Interval> axes(P.dim());
    for (std::size_t i = 0; i < P.dim(); ++i) axes[i] = {P[0][i], P[0][i]};
    for (const auto& p : P)
        for (std::size_t i = 0; i < P.dim(); ++i) {
            if (p[i] < axes[i].lo) axes[i].lo = p[i];
            if (p[i] > axes[i].hi) axes[i].hi = p[i];
        }
    return Box(std::move(axes));
}

/// Axis permutation followed by a translation. New axis i takes old axis
/// `permutation[i]`; the longest box axis ends up last and is centred at 0.
struct Normalization {
    std::vector<std::size_t> permutation;
    std::vector<Scalar> translation;

    static Normalization identity(std::size_t d) {
        Normalization n;
        n.permutation.resize(d);
        std::iota(n.permutation.begin(), n.permutation.end(), std::size_t{0});
        n.translation.assign(d, Scalar(0));
        return n;
    }

    std::size_t dim() const noexcept { return permutation.size(); }

    bool is_identity() const {
        for (std::size_t i = 0; i < dim(); ++i)
            if (permutation[i] != i || translation[i] != 0) return false;
        return true;
    }

    Point apply(const Point& p) const {
        if (p.dim() != dim()) throw UsageError("Normalization::apply: dimension mismatch");
        std::vector<Scalar> c(dim());
        for (std::size_t i = 0; i < dim(); ++i) c[i] = p[permutation[i]] + translation[i];
        return Point(std::move(c));
    }

    Point invert(const Point& q) const {
        if (q.dim() != dim()) throw UsageError("Normalization::invert: dimension mismatch");
        std::vector<Scalar> c(dim());
        for (std::size_t i = 0; i < dim(); ++i) c[permutation[i]] = q[i] - translation[i];
        return Point(std::move(c));
    }
};

inline std::pair<PointSet, Normalization> normalize(const PointSet& P) {
    const std::size_t d = P.dim();
    Box R = smallest_enclosing_box(P);
    std::size_t axis = R.longest_axis();

    Normalization n;
    for (std::size_t i = 0; i < d; ++i)
        if (i != axis) n.permutation.push_back(i);
    n.permutation.push_back(axis);
    n.translation.assign(d, Scalar(0));
    n.translation[d - 1] = -R[axis].mid();

    std::vector<Point> out;
    out.reserve(P.size());
    for (const auto& p : P) out.push_back(n.apply(p));
    return {PointSet(std::move(out)), n};
}

/// Centers of all smallest enclosing cubes: a (d-1)-box inside the plane x_d = 0.
struct CenterDomain {
    Scalar half_side;
    Box box;
    std::size_t degeneracy_rank = 0;

    Scalar side() const { return 2 * half_side; }
};

/// Requires normalized input (longest axis last, centred on 0).
inline CenterDomain center_domain(const PointSet& Pn) {
    Box R = smallest_enclosing_box(Pn);
    Scalar hh = half(R.longest_side());
    std::vector<Interval> axes;
    for (std::size_t i = 0; i + 1 < Pn.dim(); ++i) axes.push_back({R[i].hi - hh, R[i].lo + hh});
    CenterDomain C{hh, Box(std::move(axes)), 0};
    C.degeneracy_rank = C.box.degenerate_axes();
    return C;
}

/// A cube B(center, radius) enclosing P is smallest iff some pair of
/// opposite facets both touch points of P.
inline bool is_smallest_enclosing_cube(const PointSet& P, const Point& center, const Scalar& radius) {
    if (center.dim() != P.dim()) throw UsageError("is_smallest_enclosing_cube: dimension mismatch");
    for (const auto& p : P)
        if (linf_dist(p, center) > radius)
            throw PreconditionError("is_smallest_enclosing_cube: cube does not enclose the points");
    for (std::size_t i = 0; i < P.dim(); ++i) {
        Scalar lo = center[i] - radius, hi = center[i] + radius;
        bool touch_lo = false, touch_hi = false;
        for (const auto& p : P) {
            touch_lo = touch_lo || p[i] == lo;
            touch_hi = touch_hi || p[i] == hi;
        }
        if (touch_lo && touch_hi) return true;
    }
    return false;
}

}  // namespace cubeshell
