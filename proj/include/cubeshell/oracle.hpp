#pragma once

// Brute-force references. Nothing here uses the sweep, the Voronoi diagram
// or the envelope code; only points, the metric and Phi are shared.

#include "cubeshell/planar.hpp"
#include "cubeshell/shell.hpp"

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>

namespace cubeshell {

/// Why a value entered the oracle's list of possible optima.
enum class Provenance { plateau_level, pair_half_gap, domain_gap, zero };

inline std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::plateau_level: return "plateau_level";
        case Provenance::pair_half_gap: return "pair_half_gap";
        case Provenance::domain_gap: return "domain_gap";
        case Provenance::zero: return "zero";
    }
    return "?";
}

struct OracleValue {
    Scalar value;
    Provenance tag;
};

struct OracleResult {
    Scalar r;
    Vec2 center;
    Provenance tag;
    std::size_t pool_size = 0;
};

/// Largest n the exact oracle accepts; CUBESHELL_ORACLE_MAX_N overrides 60.
inline std::size_t oracle_max_n() {
    if (const char* v = std::getenv("CUBESHELL_ORACLE_MAX_N")) {
        char* end = nullptr;
        unsigned long n = std::strtoul(v, &end, 10);
        if (end != v && *end == '\0' && n > 0) return n;
    }
    return 60;
}

namespace detail {

inline Rect oracle_domain(const PointSet& Pn) {
    Box R = smallest_enclosing_box(Pn);
    Scalar hh = half(R[2].length());
    for (std::size_t i = 0; i < 2; ++i)
        if (R[i].length() > R[2].length()) throw PreconditionError("oracle: input is not normalized");
    return {R[0].hi - hh, R[0].lo + hh, R[1].hi - hh, R[1].lo + hh};
}

}  // namespace detail

/// Some point of C with Phi >= r, by exhaustive search over the grid
/// {C.xlo, a + r} x {C.ylo, b + r}; the lexicographically smallest one.
inline std::optional<Vec2> brute_decide(const PointSet& Pn, const Scalar& r) {
    if (Pn.dim() != 3) throw UsageError("brute_decide: expected 3-d points");
    const Rect C = detail::oracle_domain(Pn);
    std::vector<Scalar> X{C.xlo}, Y{C.ylo};
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < Pn.size(); ++i) {
        Scalar x = Pn[i][0] + r, y = Pn[i][1] + r;
        if (C.xlo < x && x <= C.xhi) X.push_back(x);
        if (C.ylo < y && y <= C.yhi) Y.push_back(y);
        if (abs_of(Pn[i][2]) < r) active.push_back(i);
    }
    for (auto* v : {&X, &Y}) {
        std::sort(v->begin(), v->end());
        v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    const std::size_t words = (active.size() + 63) / 64;
    auto masks = [&](const std::vector<Scalar>& vals, std::size_t axis) {
        std::vector<std::vector<std::uint64_t>> out(vals.size(), std::vector<std::uint64_t>(words, 0));
        for (std::size_t k = 0; k < vals.size(); ++k)
            for (std::size_t a = 0; a < active.size(); ++a)
                if (abs_of(vals[k] - Pn[active[a]][axis]) < r) out[k][a / 64] |= std::uint64_t{1} << (a % 64);
        return out;
    };
    const auto mx = masks(X, 0), my = masks(Y, 1);
    for (std::size_t i = 0; i < X.size(); ++i)
        for (std::size_t j = 0; j < Y.size(); ++j) {
            bool hit = false;
            for (std::size_t w = 0; w < words && !hit; ++w) hit = (mx[i][w] & my[j][w]) != 0;
            if (!hit) return Vec2{X[i], Y[j]};
        }
    return std::nullopt;
}

/// Every value max over C of Phi can take: plateau levels, half gaps
/// between two points on one planar axis, gaps between a point and a side
/// of C, and zero.
inline std::vector<OracleValue> oracle_values(const PointSet& Pn) {
    const Rect C = detail::oracle_domain(Pn);
    std::vector<OracleValue> v{{Scalar(0), Provenance::zero}};
    for (std::size_t i = 0; i < Pn.size(); ++i) {
        v.push_back({abs_of(Pn[i][2]), Provenance::plateau_level});
        v.push_back({abs_of(Pn[i][0] - C.xlo), Provenance::domain_gap});
        v.push_back({abs_of(C.xhi - Pn[i][0]), Provenance::domain_gap});
        v.push_back({abs_of(Pn[i][1] - C.ylo), Provenance::domain_gap});
        v.push_back({abs_of(C.yhi - Pn[i][1]), Provenance::domain_gap});
        for (std::size_t j = i + 1; j < Pn.size(); ++j)
            for (std::size_t a = 0; a < 2; ++a) v.push_back({half(abs_of(Pn[i][a] - Pn[j][a])), Provenance::pair_half_gap});
    }
    std::stable_sort(v.begin(), v.end(), [](const OracleValue& a, const OracleValue& b) {
        return a.value < b.value || (a.value == b.value && a.tag < b.tag);
    });
    v.erase(std::unique(v.begin(), v.end(), [](const OracleValue& a, const OracleValue& b) { return a.value == b.value; }),
            v.end());
    return v;
}

/// Exact max over C of Phi for a normalized 3-d set, with a center attaining it.
inline OracleResult exact_oracle_3d(const PointSet& Pn) {
    if (Pn.dim() != 3) throw UsageError("exact_oracle_3d: expected 3-d points");
    if (Pn.size() > oracle_max_n())
        throw UsageError("exact_oracle_3d: n = " + std::to_string(Pn.size()) + " exceeds the oracle limit " +
                         std::to_string(oracle_max_n()) + " (set CUBESHELL_ORACLE_MAX_N to raise it)");
    const auto vals = oracle_values(Pn);
    std::size_t lo = 0, hi = vals.size();
    std::optional<Vec2> best = brute_decide(Pn, vals[0].value);
    while (hi - lo > 1) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (auto w = brute_decide(Pn, vals[mid].value)) {
            lo = mid;
            best = w;
        } else {
            hi = mid;
        }
    }
    if (!best || phi(Pn, to_point(*best)) != vals[lo].value)
        throw std::logic_error("exact_oracle_3d: value list missed the optimum");
    return {vals[lo].value, *best, vals[lo].tag, vals.size()};
}

/// Max of Phi over a resolution x resolution grid spanning C (corners included).
inline Scalar grid_oracle(const PointSet& Pn, std::size_t resolution) {
    if (Pn.dim() != 3) throw UsageError("grid_oracle: expected 3-d points");
    if (resolution < 2) throw UsageError("grid_oracle: resolution must be at least 2");
    const Rect C = detail::oracle_domain(Pn);
    const Scalar steps(static_cast<long>(resolution - 1));
    Scalar best = 0;
    bool first = true;
    for (std::size_t i = 0; i < resolution; ++i)
        for (std::size_t j = 0; j < resolution; ++j) {
            Scalar x = C.xlo + (C.xhi - C.xlo) * Scalar(static_cast<long>(i)) / steps;
            Scalar y = C.ylo + (C.yhi - C.ylo) * Scalar(static_cast<long>(j)) / steps;
            Scalar v = phi(Pn, Point{x, y});
            if (first || v > best) best = v;
            first = false;
        }
    return best;
}

/// Planar reference: Phi over C is evaluated at every breakpoint and at
/// every crossing of two of the lines y = x - a, y = a - x, y = z.
inline std::pair<Scalar, Scalar> breakpoint_oracle_2d(const PointSet& Pn) {
    if (Pn.dim() != 2) throw UsageError("breakpoint_oracle_2d: expected 2-d points");
    Box R = smallest_enclosing_box(Pn);
    Scalar hh = half(R[1].length());
    const Scalar lo = R[0].hi - hh, hi = R[0].lo + hh;
    std::vector<Scalar> xs{lo, hi};
    for (const auto& p : Pn)
        for (const auto& q : Pn) {
            Scalar z = abs_of(q[1]);
            for (Scalar x : {Scalar(half(p[0] + q[0])), Scalar(p[0] + z), Scalar(p[0] - z)})
                if (lo <= x && x <= hi) xs.push_back(x);
        }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    Scalar best = phi(Pn, Point{xs[0]}), arg = xs[0];
    for (const auto& x : xs) {
        Scalar v = phi(Pn, Point{x});
        if (v > best) {
            best = v;
            arg = x;
        }
    }
    return {best, arg};
}

/// Area and boundary vertex count of a union of closed equal squares, from
/// the arrangement of all square sides.
struct ArrangementStats {
    Scalar area;
    std::size_t vertex_count = 0;
};

inline ArrangementStats arrangement_union(const std::vector<Vec2>& centers, const Scalar& r) {
    ArrangementStats out;
    if (centers.empty()) return out;
    std::vector<Scalar> xs, ys;
    for (const auto& c : centers) {
        xs.push_back(c.x - r);
        xs.push_back(c.x + r);
        ys.push_back(c.y - r);
        ys.push_back(c.y + r);
    }
    for (auto* v : {&xs, &ys}) {
        std::sort(v->begin(), v->end());
        v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    const std::size_t X = xs.size() - 1, Y = ys.size() - 1;
    std::vector<std::vector<char>> cov(X, std::vector<char>(Y, 0));
    for (std::size_t i = 0; i < X; ++i)
        for (std::size_t j = 0; j < Y; ++j) {
            for (const auto& c : centers)
                if (c.x - r <= xs[i] && xs[i + 1] <= c.x + r && c.y - r <= ys[j] && ys[j + 1] <= c.y + r) {
                    cov[i][j] = 1;
                    break;
                }
            if (cov[i][j]) out.area += (xs[i + 1] - xs[i]) * (ys[j + 1] - ys[j]);
        }
    auto at = [&](std::size_t i, std::size_t j, int di, int dj) -> int {
        long a = static_cast<long>(i) + di, b = static_cast<long>(j) + dj;
        if (a < 0 || b < 0 || a >= static_cast<long>(X) || b >= static_cast<long>(Y)) return 0;
        return cov[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    };
    for (std::size_t i = 0; i <= X; ++i)
        for (std::size_t j = 0; j <= Y; ++j) {
            int sw = at(i, j, -1, -1), se = at(i, j, 0, -1), nw = at(i, j, -1, 0), ne = at(i, j, 0, 0);
            int k = sw + se + nw + ne;
            if (k == 1 || k == 3) out.vertex_count += 1;
            if (k == 2 && sw == ne) out.vertex_count += 2;
        }
    return out;
}

/// Minimum L-inf distance from q to any of the points, by linear scan.
inline Scalar linear_scan_distance(const std::vector<Vec2>& pts, const Vec2& q) {
    if (pts.empty()) throw UsageError("linear_scan_distance: no points");
    Scalar best = linf(pts[0], q);
    for (const auto& p : pts) best = std::min(best, linf(p, q));
    return best;
}

/// A point of a rectangle with every site at minimum L-inf distance from it.
struct EquidistantPoint {
    Vec2 point;
    std::vector<std::size_t> nearest;
};

namespace detail {

// Gaussian elimination on an augmented square system; none when singular.
inline std::optional<std::vector<Scalar>> solve_linear(std::vector<std::vector<Scalar>> m) {
    const std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && sgn(m[piv][col]) == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(m[piv], m[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || sgn(m[r][col]) == 0) continue;
            Scalar f = m[r][col] / m[col][col];
            for (std::size_t k = col; k <= n; ++k) m[r][k] -= f * m[col][k];
        }
    }
    std::vector<Scalar> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
    return x;
}

inline std::vector<std::size_t> scan_nearest(const std::vector<Vec2>& sites, const Vec2& q) {
    const Scalar d = linear_scan_distance(sites, q);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < sites.size(); ++i)
        if (linf(sites[i], q) == d) out.push_back(i);
    return out;
}

}  // namespace detail

/// Corners of C, points of C equidistant from three sites with none closer,
/// and points of the sides of C equidistant from two sites with none closer.
/// Each distance |q - s| is written as +-(q_x - s_x) or +-(q_y - s_y) in
/// every combination; the resulting linear systems are solved exactly and
/// the solutions checked. Continua of equidistant points are not reported.
inline std::vector<EquidistantPoint> equidistant_points(const std::vector<Vec2>& sites, const Rect& C) {
    const std::size_t n = sites.size();
    auto coord = [](const Vec2& v, int axis) -> const Scalar& { return axis == 0 ? v.x : v.y; };
    auto at_radius = [&](const Vec2& q, const Scalar& rho, std::initializer_list<std::size_t> ids) {
        if (sgn(rho) <= 0) return false;
        for (std::size_t i : ids)
            if (linf(sites[i], q) != rho) return false;
        return linear_scan_distance(sites, q) == rho;
    };

    const auto corners = C.corners();
    std::vector<Vec2> pts(corners.begin(), corners.end());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                for (int choice = 0; choice < 64; ++choice) {
                    std::vector<std::vector<Scalar>> m;
                    int c = choice;
                    for (std::size_t s : {i, j, k}) {
                        const int axis = (c & 3) >> 1, sign = (c & 1) ? -1 : 1;
                        c >>= 2;
                        m.push_back({Scalar(axis == 0 ? 1 : 0), Scalar(axis == 1 ? 1 : 0), Scalar(-sign),
                                     coord(sites[s], axis)});
                    }
                    auto x = detail::solve_linear(std::move(m));
                    if (!x) continue;
                    Vec2 q{(*x)[0], (*x)[1]};
                    if (C.contains(q) && at_radius(q, (*x)[2], {i, j, k})) pts.push_back(q);
                }
    for (std::size_t e = 0; e < 4; ++e) {
        const Vec2 p0 = corners[e], dir = corners[(e + 1) % 4] - corners[e];
        if (sgn(dir.x) == 0 && sgn(dir.y) == 0) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (int choice = 0; choice < 16; ++choice) {
                    std::vector<std::vector<Scalar>> m;
                    int c = choice;
                    for (std::size_t s : {i, j}) {
                        const int axis = (c & 3) >> 1, sign = (c & 1) ? -1 : 1;
                        c >>= 2;
                        m.push_back({coord(dir, axis), Scalar(-sign), coord(sites[s], axis) - coord(p0, axis)});
                    }
                    auto x = detail::solve_linear(std::move(m));
                    if (!x || sgn((*x)[0]) < 0 || (*x)[0] > 1) continue;
                    Vec2 q{p0.x + (*x)[0] * dir.x, p0.y + (*x)[0] * dir.y};
                    if (at_radius(q, (*x)[1], {i, j})) pts.push_back(q);
                }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<EquidistantPoint> out;
    for (const auto& p : pts) out.push_back({p, detail::scan_nearest(sites, p)});
    return out;
}

}  // namespace cubeshell
