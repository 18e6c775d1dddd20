#pragma once

#include "cubeshell/cubeshell.hpp"

#include <random>
#include <string>
#include <vector>

namespace cubeshell::testing {

inline Scalar q(const std::string& s) { return parse_scalar(s); }

inline Scalar ratio(long num, long den) {
    Scalar r(num, den);
    r.canonicalize();
    return r;
}

inline PointSet points(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<Point> out;
    for (const auto& r : rows) {
        std::vector<Scalar> c;
        for (long v : r) c.emplace_back(v);
        out.emplace_back(std::move(c));
    }
    return PointSet(std::move(out));
}

inline PointSet cube_corners() {
    return points({{-1, -1, -1}, {-1, -1, 1}, {-1, 1, -1}, {-1, 1, 1}, {1, -1, -1}, {1, -1, 1}, {1, 1, -1}, {1, 1, 1}});
}

inline PointSet with_point(const PointSet& P, Point p) {
    auto v = P.points();
    v.push_back(std::move(p));
    return PointSet(std::move(v));
}

/// Coordinates k/den with k uniform in [-range, range].
inline PointSet random_points(std::mt19937_64& rng, std::size_t n, std::size_t d, long range = 10000,
                              long den = 100) {
    std::uniform_int_distribution<long> k(-range, range);
    std::vector<Point> out;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Scalar> c(d);
        for (auto& x : c) {
            x = Scalar(k(rng), den);
            x.canonicalize();
        }
        out.emplace_back(std::move(c));
    }
    return PointSet(std::move(out));
}

/// Small-integer instances, rich in ties and shared coordinates.
inline PointSet random_grid_points(std::mt19937_64& rng, std::size_t n, std::size_t d, long range = 3) {
    return random_points(rng, n, d, range, 1);
}

inline std::vector<Vec2> random_vec2s(std::mt19937_64& rng, std::size_t n, long range = 10000, long den = 100) {
    std::vector<Vec2> out;
    PointSet P = random_points(rng, n, 2, range, den);
    for (const auto& p : P) out.push_back(to_vec2(p));
    return out;
}

inline std::size_t uniform_size(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace cubeshell::testing
