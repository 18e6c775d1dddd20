#pragma once

// Exact planar primitives for the halving plane of a 3-d instance.

#include "cubeshell/geometry.hpp"

#include <array>
#include <optional>
#include <vector>

namespace cubeshell {

struct Vec2 {
    Scalar x, y;

    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
    friend Vec2 operator*(const Scalar& s, const Vec2& a) { return {s * a.x, s * a.y}; }
    friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Vec2& a, const Vec2& b) { return !(a == b); }
    friend bool operator<(const Vec2& a, const Vec2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }
};

inline Scalar cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Scalar dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

inline Scalar linf(const Vec2& a, const Vec2& b) {
    Scalar dx = abs_of(a.x - b.x), dy = abs_of(a.y - b.y);
    return dx > dy ? dx : dy;
}

inline Vec2 midpoint(const Vec2& a, const Vec2& b) { return {half(a.x + b.x), half(a.y + b.y)}; }

inline Scalar l1(const Vec2& a, const Vec2& b) { return abs_of(a.x - b.x) + abs_of(a.y - b.y); }

inline Vec2 to_vec2(const Point& p) {
    if (p.dim() < 2) throw UsageError("to_vec2: need at least two coordinates");
    return {p[0], p[1]};
}

inline Point to_point(const Vec2& v) { return Point{v.x, v.y}; }

/// Closed axis-aligned rectangle, possibly degenerate to a segment or a point.
struct Rect {
    Scalar xlo, xhi, ylo, yhi;

    static Rect from_box(const Box& b) {
        if (b.dim() != 2) throw UsageError("Rect::from_box: need a 2-d box");
        return {b[0].lo, b[0].hi, b[1].lo, b[1].hi};
    }

    bool contains(const Vec2& p) const { return xlo <= p.x && p.x <= xhi && ylo <= p.y && p.y <= yhi; }
    bool strictly_contains(const Vec2& p) const { return xlo < p.x && p.x < xhi && ylo < p.y && p.y < yhi; }

    /// Corners in counter-clockwise order from (xlo, ylo); repeated when degenerate.
    std::array<Vec2, 4> corners() const { return {{{xlo, ylo}, {xhi, ylo}, {xhi, yhi}, {xlo, yhi}}}; }

    Rect expanded(const Scalar& m) const { return {xlo - m, xhi + m, ylo - m, yhi + m}; }

    Rect united(const Rect& o) const {
        return {std::min(xlo, o.xlo), std::max(xhi, o.xhi), std::min(ylo, o.ylo), std::max(yhi, o.yhi)};
    }

    static Rect bounding(const std::vector<Vec2>& pts) {
        if (pts.empty()) throw UsageError("Rect::bounding: no points");
        Rect r{pts[0].x, pts[0].x, pts[0].y, pts[0].y};
        for (const auto& p : pts) {
            if (p.x < r.xlo) r.xlo = p.x;
            if (p.x > r.xhi) r.xhi = p.x;
            if (p.y < r.ylo) r.ylo = p.y;
            if (p.y > r.yhi) r.yhi = p.y;
        }
        return r;
    }
};

struct Segment2 {
    Vec2 a, b;
};

inline bool on_segment(const Vec2& p, const Segment2& s) {
    if (sgn(cross(s.b - s.a, p - s.a)) != 0) return false;
    return std::min(s.a.x, s.b.x) <= p.x && p.x <= std::max(s.a.x, s.b.x) && std::min(s.a.y, s.b.y) <= p.y &&
           p.y <= std::max(s.a.y, s.b.y);
}

/// Points common to two closed segments: nothing, one crossing point, or the
/// endpoints of a collinear overlap. Either segment may be a single point.
inline std::vector<Vec2> intersect_segments(const Segment2& s, const Segment2& t) {
    std::vector<Vec2> out;
    Vec2 r = s.b - s.a, q = t.b - t.a;
    Scalar denom = cross(r, q);
    if (sgn(denom) != 0) {
        Scalar u = cross(t.a - s.a, q) / denom;
        Scalar v = cross(t.a - s.a, r) / denom;
        if (u >= 0 && u <= 1 && v >= 0 && v <= 1) out.push_back(s.a + u * r);
        return out;
    }
    for (const Vec2* p : {&s.a, &s.b})
        if (on_segment(*p, t)) out.push_back(*p);
    for (const Vec2* p : {&t.a, &t.b})
        if (on_segment(*p, s)) out.push_back(*p);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.size() > 2) out = {out.front(), out.back()};
    return out;
}

}  // namespace cubeshell
