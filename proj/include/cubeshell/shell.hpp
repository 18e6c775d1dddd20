#pragma once

// Distance functions over the halving plane and the shell induced by a center.

#include "cubeshell/geometry.hpp"

namespace cubeshell {

/// Closed region between two concentric axis-aligned hypercubes.
struct Shell {
    Point center;
    Scalar outer_radius;
    Scalar inner_radius;

    Scalar width() const { return outer_radius - inner_radius; }
};

namespace detail {

// Accepts a (d-1)-point of the plane, or a d-point already lying on it.
inline std::size_t planar_dims(const Point& p, const Point& c) {
    if (c.dim() + 1 == p.dim()) return c.dim();
    if (c.dim() == p.dim() && sgn(c[c.dim() - 1]) == 0) return c.dim() - 1;
    throw PreconditionError("center must be a point of the plane x_d = 0");
}

}  // namespace detail

/// L-infinity distance within the plane between c and the projection of p.
inline Scalar f_bar(const Point& p, const Point& c) {
    std::size_t k = detail::planar_dims(p, c);
    Scalar best = 0;
    for (std::size_t i = 0; i < k; ++i) {
        Scalar d = abs_of(p[i] - c[i]);
        if (d > best) best = d;
    }
    return best;
}

/// Distance from the lifted center (c, 0) to p; never below the plateau |x_d(p)|.
inline Scalar f_p(const Point& p, const Point& c) {
    Scalar v = f_bar(p, c);
    Scalar plateau = abs_of(p[p.dim() - 1]);
    return v > plateau ? v : plateau;
}

/// Lower envelope of all f_p at c, by linear scan.
inline Scalar phi(const PointSet& Pn, const Point& c) {
    Scalar best = f_p(Pn[0], c);
    for (std::size_t i = 1; i < Pn.size(); ++i) {
        Scalar v = f_p(Pn[i], c);
        if (v < best) best = v;
    }
    return best;
}

/// Maps a point of the plane x_d = 0 of the normalized frame back to input coordinates.
inline Point lift(const Point& c, const Normalization& n) {
    if (c.dim() + 1 != n.dim()) throw UsageError("lift: planar point has the wrong dimension");
    std::vector<Scalar> coords = c.coords();
    coords.emplace_back(0);
    return n.invert(Point(std::move(coords)));
}

/// The unique minimum-width shell with the given center.
inline Shell best_shell_at(const PointSet& P, const Point& center) {
    Scalar outer = linf_dist(P[0], center), inner = outer;
    for (std::size_t i = 1; i < P.size(); ++i) {
        Scalar d = linf_dist(P[i], center);
        if (d > outer) outer = d;
        if (d < inner) inner = d;
    }
    return {center, outer, inner};
}

/// Every point lies in the closed outer cube and outside the open inner cube.
inline bool encloses(const Shell& shell, const PointSet& P) {
    for (const auto& p : P) {
        Scalar d = linf_dist(p, shell.center);
        if (d > shell.outer_radius || d < shell.inner_radius) return false;
    }
    return true;
}

}  // namespace cubeshell
