#pragma once

// Minimum-width hypercubic shell for d = 1, 2, 3.
//
// For d = 3 the optimum inner radius r* = max over C of Phi is the larger
// of two values:
//   r1: the largest plateau level |x3(p)| still feasible, by binary search
//       over the coverage decision;
//   r2: the largest nearest-site distance over Voronoi candidates in C,
//       where the sites are the projections of the points with |x3| <= r1.

#include "cubeshell/envelope.hpp"
#include "cubeshell/linf_voronoi.hpp"
#include "cubeshell/shell.hpp"
#include "cubeshell/square_union.hpp"

#include <optional>
#include <string>

namespace cubeshell {

enum class CaseTag { plateau, voronoi, both, envelope, direct };

inline std::string to_string(CaseTag t) {
    switch (t) {
        case CaseTag::plateau: return "plateau";
        case CaseTag::voronoi: return "voronoi";
        case CaseTag::both: return "both";
        case CaseTag::envelope: return "envelope";
        case CaseTag::direct: return "direct";
    }
    return "?";
}

struct SolveResult {
    std::size_t dimension = 0;
    std::size_t n = 0;
    Shell shell;
    Scalar inner_level;
    CaseTag tag = CaseTag::direct;
    std::size_t candidate_count = 0;
    std::optional<Scalar> r1, r2;
    std::vector<std::size_t> outer_contacts;  // indices of P on the outer cube
    std::vector<std::size_t> inner_contacts;  // indices of P on the inner cube

    Scalar width() const { return shell.width(); }
};

/// A feasible inner radius in the normalized frame and a center attaining it.
struct LevelResult {
    Scalar level;
    Vec2 center;
    std::size_t candidates = 0;
};

namespace detail {

inline void fill_contacts(SolveResult& res, const PointSet& P) {
    for (std::size_t i = 0; i < P.size(); ++i) {
        Scalar d = linf_dist(P[i], res.shell.center);
        if (d == res.shell.outer_radius) res.outer_contacts.push_back(i);
        if (d == res.shell.inner_radius) res.inner_contacts.push_back(i);
    }
}

inline SolveResult finish(const PointSet& P, const Point& center, const Scalar& half_side, const Scalar& level,
                          CaseTag tag) {
    SolveResult res;
    res.dimension = P.dim();
    res.n = P.size();
    res.shell = best_shell_at(P, center);
    res.inner_level = level;
    res.tag = tag;
    if (res.shell.outer_radius != half_side || res.shell.inner_radius != level)
        throw std::logic_error("solver: reconstructed shell disagrees with the computed optimum");
    fill_contacts(res, P);
    return res;
}

inline void require_dim(const PointSet& P, std::size_t d, const char* who) {
    if (P.dim() != d) throw UsageError(std::string(who) + ": expected " + std::to_string(d) + "-d points");
}

}  // namespace detail

/// Largest plateau level v with some c in C having Phi(c) >= v.
inline std::optional<LevelResult> solve_case1(const PointSet& Pn) {
    detail::require_dim(Pn, 3, "solve_case1");
    std::vector<Scalar> levels;
    levels.reserve(Pn.size());
    for (const auto& p : Pn) levels.push_back(abs_of(p[2]));
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    CoverageDecider decider(Pn, center_domain(Pn));
    // The smallest level is always met: every f_p is at least its plateau.
    auto best = decider.decide(levels[0]);
    if (!best.feasible) return std::nullopt;
    std::size_t lo = 0, hi = levels.size();  // levels[lo] feasible, levels[hi..] not
    while (hi - lo > 1) {
        std::size_t mid = lo + (hi - lo) / 2;
        auto r = decider.decide(levels[mid]);
        if (r.feasible) {
            lo = mid;
            best = std::move(r);
        } else {
            hi = mid;
        }
    }
    return LevelResult{levels[lo], *best.witness, levels.size()};
}

/// Best Voronoi candidate of C over the projections of the points with
/// |x3| <= cap (all points when no cap is given). A candidate counts only
/// if each of its nearest sites is at least as far as the plateau of every
/// point it stands for; there Phi equals the nearest-site distance.
inline std::optional<LevelResult> solve_case2(const PointSet& Pn, const std::optional<Scalar>& cap = std::nullopt) {
    detail::require_dim(Pn, 3, "solve_case2");
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < Pn.size(); ++i)
        if (!cap || abs_of(Pn[i][2]) <= *cap) ids.push_back(i);
    if (ids.empty()) return std::nullopt;

    const Rect C = Rect::from_box(center_domain(Pn).box);
    const VoronoiDiagram vd = VoronoiDiagram::build_near(make_sites(Pn, std::move(ids)), C);
    const auto cands = vd_candidates_in_rect(vd, C);

    std::optional<LevelResult> best;
    for (const auto& c : cands) {
        const Scalar d = linf(c.point, vd.sites()[c.nearest.front()].location);
        bool kept = true;
        for (std::size_t s : c.nearest) {
            for (std::size_t p : vd.sites()[s].sources)
                if (abs_of(Pn[p][2]) > d) {
                    kept = false;
                    break;
                }
            if (!kept) break;
        }
        if (kept && (!best || d > best->level)) best = LevelResult{d, c.point, 0};
    }
    if (best) best->candidates = cands.size();
    return best;
}

inline SolveResult solve3d(const PointSet& P) {
    detail::require_dim(P, 3, "solve3d");
    auto [Pn, norm] = normalize(P);
    const CenterDomain C = center_domain(Pn);

    if (P.size() <= 2) {
        // Any two points sit on the boundary of the cube centred at their midpoint.
        std::vector<Scalar> mid(3);
        for (std::size_t i = 0; i < 3; ++i) mid[i] = half(P[0][i] + P[P.size() - 1][i]);
        return detail::finish(P, Point(std::move(mid)), C.half_side, C.half_side, CaseTag::direct);
    }

    auto c1 = solve_case1(Pn);
    if (!c1) throw std::logic_error("solve3d: the lowest plateau level must be feasible");
    auto c2 = solve_case2(Pn, c1->level);

    CaseTag tag = CaseTag::plateau;
    const LevelResult* win = &*c1;
    if (c2 && c2->level > c1->level) {
        tag = CaseTag::voronoi;
        win = &*c2;
    } else if (c2 && c2->level == c1->level) {
        tag = CaseTag::both;
    }
    SolveResult res = detail::finish(P, lift(to_point(win->center), norm), C.half_side, win->level, tag);
    res.r1 = c1->level;
    if (c2) res.r2 = c2->level;
    res.candidate_count = c1->candidates + (c2 ? c2->candidates : 0);
    return res;
}

/// Planar case: C is a segment and Phi restricted to it is the lower
/// envelope of n functions with at most three linear pieces each.
inline SolveResult solve2d(const PointSet& P) {
    detail::require_dim(P, 2, "solve2d");
    auto [Pn, norm] = normalize(P);
    const CenterDomain C = center_domain(Pn);
    const Scalar lo = C.box[0].lo, hi = C.box[0].hi;

    std::vector<PiecewiseLinear> fs;
    fs.reserve(Pn.size());
    for (const auto& p : Pn) fs.push_back(plateau_function(p[0], abs_of(p[1]), lo, hi));
    const PiecewiseLinear env = lower_envelope(fs);
    auto [r, x] = max_of(env);

    SolveResult res = detail::finish(P, lift(Point{x}, norm), C.half_side, r, CaseTag::envelope);
    res.candidate_count = env.xs.size();
    return res;
}

inline SolveResult solve1d(const PointSet& P) {
    detail::require_dim(P, 1, "solve1d");
    Box R = smallest_enclosing_box(P);
    Point center{R[0].mid()};
    Scalar inner = linf_dist(P[0], center);
    for (const auto& p : P) inner = std::min(inner, linf_dist(p, center));
    return detail::finish(P, center, half(R.longest_side()), inner, CaseTag::direct);
}

inline SolveResult solve(const PointSet& P) {
    switch (P.dim()) {
        case 1: return solve1d(P);
        case 2: return solve2d(P);
        case 3: return solve3d(P);
        default: throw UnsupportedDimension(P.dim());
    }
}

}  // namespace cubeshell
