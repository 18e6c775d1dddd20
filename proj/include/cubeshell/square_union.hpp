#pragma once

// Sublevel sets of the envelope as unions of equal open squares in the
// halving plane: boundary extraction by plane sweep, and the coverage
// decision "does the union of open squares cover the center domain?".

#include "cubeshell/planar.hpp"
#include "cubeshell/shell.hpp"

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace cubeshell {

struct Square {
    Vec2 center;
    Scalar radius;
    std::size_t source = 0;
};

/// Section of B(p, w) by the plane x_3 = 0; empty when |x_3(p)| >= w.
inline std::optional<Square> clip_ball(const Point& p, const Scalar& w, std::size_t source = 0) {
    if (sgn(w) < 0) throw UsageError("clip_ball: negative radius");
    if (p.dim() != 3) throw UsageError("clip_ball: expected a 3-d point");
    if (abs_of(p[2]) >= w) return std::nullopt;
    return Square{{p[0], p[1]}, w, source};
}

/// Boundary of a union of closed equal squares. Pinch points (two squares
/// touching at a corner) contribute one vertex per incident corner.
struct UnionBoundary {
    std::vector<Vec2> vertices;
    std::vector<Segment2> edges;
    std::size_t component_count = 0;
    Scalar area = 0;
};

namespace detail {

// Range-add / min segment tree without push-down; a node's stored minimum
// includes its own pending add but not those of its ancestors.
class CoverTree {
public:
    explicit CoverTree(std::size_t n) : n_(n), mn_(4 * std::max<std::size_t>(n, 1), 0), add_(mn_.size(), 0) {}

    void add(std::size_t l, std::size_t r, int v) {
        if (l < r) add(1, 0, n_, l, r, v);
    }

    int min() const { return n_ ? mn_[1] : 1; }

    /// Leftmost leaf attaining the global minimum.
    std::size_t argmin() const {
        std::size_t node = 1, lo = 0, hi = n_;
        int need = mn_[1];
        while (hi - lo > 1) {
            need -= add_[node];
            std::size_t mid = (lo + hi) / 2;
            if (mn_[2 * node] == need) {
                node = 2 * node;
                hi = mid;
            } else {
                node = 2 * node + 1;
                lo = mid;
            }
        }
        return lo;
    }

    /// Appends every leaf in [l, r) whose total count is zero.
    void zeros(std::size_t l, std::size_t r, std::vector<std::size_t>& out) const {
        if (l < r) zeros(1, 0, n_, l, r, 0, out);
    }

private:
    void add(std::size_t node, std::size_t lo, std::size_t hi, std::size_t l, std::size_t r, int v) {
        if (r <= lo || hi <= l) return;
        if (l <= lo && hi <= r) {
            add_[node] += v;
            mn_[node] += v;
            return;
        }
        std::size_t mid = (lo + hi) / 2;
        add(2 * node, lo, mid, l, r, v);
        add(2 * node + 1, mid, hi, l, r, v);
        mn_[node] = add_[node] + std::min(mn_[2 * node], mn_[2 * node + 1]);
    }

    void zeros(std::size_t node, std::size_t lo, std::size_t hi, std::size_t l, std::size_t r, int above,
               std::vector<std::size_t>& out) const {
        if (r <= lo || hi <= l || mn_[node] + above > 0) return;
        if (hi - lo == 1) {
            out.push_back(lo);
            return;
        }
        std::size_t mid = (lo + hi) / 2;
        zeros(2 * node, lo, mid, l, r, above + add_[node], out);
        zeros(2 * node + 1, mid, hi, l, r, above + add_[node], out);
    }

    std::size_t n_;
    std::vector<int> mn_, add_;
};

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[b] = a;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

inline mpz_class floor_div(const Scalar& a, const Scalar& b) {
    Scalar q = a / b;
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

inline std::vector<Square> dedupe_squares(std::vector<Square> squares) {
    std::sort(squares.begin(), squares.end(), [](const Square& a, const Square& b) { return a.center < b.center; });
    squares.erase(std::unique(squares.begin(), squares.end(),
                              [](const Square& a, const Square& b) { return a.center == b.center; }),
                  squares.end());
    return squares;
}

inline std::size_t count_components(const std::vector<Square>& sq) {
    if (sq.empty()) return 0;
    const Scalar cell = 2 * sq.front().radius;
    std::map<std::pair<mpz_class, mpz_class>, std::vector<std::size_t>> grid;
    for (std::size_t i = 0; i < sq.size(); ++i)
        grid[{floor_div(sq[i].center.x, cell), floor_div(sq[i].center.y, cell)}].push_back(i);

    DisjointSets ds(sq.size());
    auto touching = [&](std::size_t i, std::size_t j) {
        return abs_of(sq[i].center.x - sq[j].center.x) <= cell && abs_of(sq[i].center.y - sq[j].center.y) <= cell;
    };
    // Two centers in one cell are closer than `cell` on both axes.
    for (auto& [key, ids] : grid)
        for (std::size_t k = 1; k < ids.size(); ++k) ds.unite(ids[0], ids[k]);
    for (auto& [key, ids] : grid) {
        for (int dx = -1; dx <= 1; ++dx)
            for (int dy = -1; dy <= 1; ++dy) {
                if (dx < 0 || (dx == 0 && dy <= 0)) continue;
                auto it = grid.find({key.first + dx, key.second + dy});
                if (it == grid.end() || ds.find(ids[0]) == ds.find(it->second[0])) continue;
                bool joined = false;
                for (std::size_t a : ids) {
                    for (std::size_t b : it->second)
                        if (touching(a, b)) {
                            ds.unite(a, b);
                            joined = true;
                            break;
                        }
                    if (joined) break;
                }
            }
    }
    std::size_t count = 0;
    for (std::size_t i = 0; i < sq.size(); ++i) count += ds.find(i) == i;
    return count;
}

}  // namespace detail

/// Boundary of the union of closed squares of one common radius, by a
/// left-to-right sweep over square sides with a coverage tree over y.
inline UnionBoundary union_of_squares(std::vector<Square> squares) {
    UnionBoundary out;
    if (squares.empty()) return out;
    const Scalar r = squares.front().radius;
    for (const auto& s : squares) {
        if (s.radius != r) throw PreconditionError("union_of_squares: squares must share one radius");
        if (sgn(r) <= 0) throw PreconditionError("union_of_squares: radius must be positive");
    }
    squares = detail::dedupe_squares(std::move(squares));
    const std::size_t n = squares.size();

    std::vector<Scalar> ys;
    ys.reserve(2 * n);
    for (const auto& s : squares) {
        ys.push_back(s.center.y - r);
        ys.push_back(s.center.y + r);
    }
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    auto index_of = [&](const Scalar& y) {
        return static_cast<std::size_t>(std::lower_bound(ys.begin(), ys.end(), y) - ys.begin());
    };
    std::vector<std::pair<std::size_t, std::size_t>> span(n);
    for (std::size_t i = 0; i < n; ++i)
        span[i] = {index_of(squares[i].center.y - r), index_of(squares[i].center.y + r)};

    struct Event {
        Scalar x;
        bool start;
        std::size_t id;
    };
    std::vector<Event> events;
    events.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        events.push_back({squares[i].center.x - r, true, i});
        events.push_back({squares[i].center.x + r, false, i});
    }
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) { return a.x < b.x; });

    struct Piece {
        Scalar x, y0, y1;
        bool region_left;
    };
    std::vector<Piece> pieces;
    detail::CoverTree tree(ys.size() - 1);
    std::vector<std::size_t> hits;

    auto flush_runs = [&](const Scalar& x, bool region_left) {
        std::sort(hits.begin(), hits.end());
        hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
        for (std::size_t k = 0; k < hits.size();) {
            std::size_t j = k;
            while (j + 1 < hits.size() && hits[j + 1] == hits[j] + 1) ++j;
            pieces.push_back({x, ys[hits[k]], ys[hits[j] + 1], region_left});
            k = j + 1;
        }
        hits.clear();
    };

    for (std::size_t e = 0; e < events.size();) {
        std::size_t f = e;
        while (f < events.size() && events[f].x == events[e].x) ++f;
        const Scalar x = events[e].x;
        // Left sides of the union: new squares over parts not covered just left of x.
        for (std::size_t k = e; k < f; ++k)
            if (events[k].start) tree.zeros(span[events[k].id].first, span[events[k].id].second, hits);
        flush_runs(x, false);
        for (std::size_t k = e; k < f; ++k)
            tree.add(span[events[k].id].first, span[events[k].id].second, events[k].start ? 1 : -1);
        // Right sides: closing squares over parts left uncovered just right of x.
        for (std::size_t k = e; k < f; ++k)
            if (!events[k].start) tree.zeros(span[events[k].id].first, span[events[k].id].second, hits);
        flush_runs(x, true);
        e = f;
    }

    std::vector<std::pair<Vec2, std::size_t>> by_row;  // (vertex as (y, x), index)
    for (const auto& p : pieces) {
        out.edges.push_back({{p.x, p.y0}, {p.x, p.y1}});
        out.vertices.push_back({p.x, p.y0});
        out.vertices.push_back({p.x, p.y1});
        out.area += (p.region_left ? p.x : Scalar(-p.x)) * (p.y1 - p.y0);
    }
    for (std::size_t i = 0; i < out.vertices.size(); ++i)
        by_row.push_back({{out.vertices[i].y, out.vertices[i].x}, i});
    std::sort(by_row.begin(), by_row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t k = 0; k + 1 < by_row.size(); k += 2) {
        if (by_row[k].first.x != by_row[k + 1].first.x)
            throw std::logic_error("union_of_squares: unpaired boundary vertex");
        out.edges.push_back({out.vertices[by_row[k].second], out.vertices[by_row[k + 1].second]});
    }
    out.component_count = detail::count_components(squares);
    return out;
}

namespace detail {

// Searches C for a point outside every open square of radius r centred at
// centers[id] for the ids listed (ids sorted by x in by_x, by y in by_y).
// If such points exist, one has x in {C.xlo} + {a + r} and y in
// {C.ylo} + {b + r}: the largest lower bound on each axis in any feasible
// choice of "which side of each square" is attained.
inline std::optional<Vec2> find_uncovered(const Rect& C, const Scalar& r, const std::vector<Vec2>& centers,
                                          const std::vector<std::uint32_t>& by_x,
                                          const std::vector<std::uint32_t>& by_y) {
    const std::size_t m = by_x.size();

    std::vector<Scalar> ycand{C.ylo};
    for (auto id : by_y) {
        Scalar v = centers[id].y + r;
        if (v > C.ylo && v <= C.yhi && v != ycand.back()) ycand.push_back(std::move(v));
    }
    const std::size_t K = ycand.size();
    std::vector<Scalar> yplus(K), yminus(K);
    for (std::size_t k = 0; k < K; ++k) {
        yplus[k] = ycand[k] + r;
        yminus[k] = ycand[k] - r;
    }
    // Square id covers ycand[k] iff b - r < ycand[k] < b + r.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> span(centers.size());
    std::size_t lo = 0, hi = 0;
    for (auto id : by_y) {
        const Scalar& b = centers[id].y;
        while (lo < K && yplus[lo] <= b) ++lo;
        while (hi < K && yminus[hi] < b) ++hi;
        span[id] = {static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(hi)};
    }

    std::vector<Scalar> xcand{C.xlo};
    for (auto id : by_x) {
        Scalar v = centers[id].x + r;
        if (v > C.xlo && v <= C.xhi && v != xcand.back()) xcand.push_back(std::move(v));
    }

    CoverTree tree(K);
    std::size_t ins = 0, del = 0;
    for (const auto& x : xcand) {
        Scalar xr = x + r, xl = x - r;
        while (ins < m && centers[by_x[ins]].x < xr) {
            auto s = span[by_x[ins]];
            tree.add(s.first, s.second, 1);
            ++ins;
        }
        while (del < ins && centers[by_x[del]].x <= xl) {
            auto s = span[by_x[del]];
            tree.add(s.first, s.second, -1);
            ++del;
        }
        if (tree.min() == 0) return Vec2{x, ycand[tree.argmin()]};
    }
    return std::nullopt;
}

inline std::vector<std::uint32_t> sorted_ids(const std::vector<Vec2>& centers, bool by_x) {
    std::vector<std::uint32_t> ids(centers.size());
    std::iota(ids.begin(), ids.end(), std::uint32_t{0});
    std::sort(ids.begin(), ids.end(), [&](std::uint32_t a, std::uint32_t b) {
        return by_x ? centers[a].x < centers[b].x : centers[a].y < centers[b].y;
    });
    return ids;
}

inline const CenterDomain& require_planar(const CenterDomain& C) {
    if (C.box.dim() != 2) throw UsageError("expected a 3-d instance (planar center domain)");
    return C;
}

}  // namespace detail

/// Some c in C outside every open square, i.e. with Phi(c) >= w when the
/// squares are all nonempty clip_ball(p, w); none if C is covered.
inline std::optional<Vec2> uncovered_witness(const CenterDomain& C, const std::vector<Square>& squares,
                                             const Scalar& w) {
    detail::require_planar(C);
    std::vector<Vec2> centers;
    centers.reserve(squares.size());
    for (const auto& s : squares) {
        if (s.radius != w) throw PreconditionError("uncovered_witness: square radius differs from w");
        centers.push_back(s.center);
    }
    return detail::find_uncovered(Rect::from_box(C.box), w, centers, detail::sorted_ids(centers, true),
                                  detail::sorted_ids(centers, false));
}

struct DecideResult {
    bool feasible = false;
    std::optional<Vec2> witness;
};

/// Repeated coverage decisions on one normalized 3-d point set. The
/// per-point orderings are computed once; each decision is a linear filter
/// plus one sweep.
class CoverageDecider {
public:
    CoverageDecider(const PointSet& Pn, const CenterDomain& C) : rect_(Rect::from_box(detail::require_planar(C).box)) {
        if (Pn.dim() != 3) throw UsageError("CoverageDecider: expected 3-d points");
        centers_.reserve(Pn.size());
        levels_.reserve(Pn.size());
        for (const auto& p : Pn) {
            centers_.push_back({p[0], p[1]});
            levels_.push_back(abs_of(p[2]));
        }
        by_x_ = detail::sorted_ids(centers_, true);
        by_y_ = detail::sorted_ids(centers_, false);
    }

    DecideResult decide(const Scalar& r) const {
        if (sgn(r) < 0) throw UsageError("decide: negative level");
        std::vector<std::uint32_t> xs, ys;
        for (auto id : by_x_)
            if (levels_[id] < r) xs.push_back(id);
        for (auto id : by_y_)
            if (levels_[id] < r) ys.push_back(id);
        auto w = detail::find_uncovered(rect_, r, centers_, xs, ys);
        return {w.has_value(), w};
    }

private:
    Rect rect_;
    std::vector<Vec2> centers_;
    std::vector<Scalar> levels_;
    std::vector<std::uint32_t> by_x_, by_y_;
};

/// Is there a center c in C with Phi(c) >= r (a shell of width at most h/2 - r)?
inline DecideResult decide(const PointSet& Pn, const Scalar& r) {
    if (sgn(r) < 0) throw UsageError("decide: negative level");
    return CoverageDecider(Pn, center_domain(Pn)).decide(r);
}

}  // namespace cubeshell
