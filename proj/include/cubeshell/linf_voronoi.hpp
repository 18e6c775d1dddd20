#pragma once

// Planar nearest-site diagram under the L-infinity metric. Pairs of sites
// whose equidistant set is two-dimensional (equal x or equal y) are split
// by comparing (L-inf, L1) lexicographically, which places a straight
// midline through the flat region. Every cell is star-shaped around its
// site and is computed by clipping a frame rectangle against bisectors in
// polar order.

#include "cubeshell/geometry.hpp"
#include "cubeshell/kdtree.hpp"
#include "cubeshell/planar.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace cubeshell {

struct Site {
    Vec2 location;
    std::vector<std::size_t> sources;
};

/// Sites for arbitrary planar points; source indices refer to `pts`.
inline std::vector<Site> make_sites(const std::vector<Vec2>& pts) {
    std::vector<std::size_t> ids(pts.size());
    std::iota(ids.begin(), ids.end(), std::size_t{0});
    std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
        return pts[a] < pts[b] || (pts[a] == pts[b] && a < b);
    });
    std::vector<Site> out;
    for (std::size_t id : ids) {
        if (out.empty() || out.back().location != pts[id]) out.push_back({pts[id], {}});
        out.back().sources.push_back(id);
    }
    return out;
}

/// Projections of the chosen points of a normalized 3-d set, coincident
/// projections merged into one site.
inline std::vector<Site> make_sites(const PointSet& Pn, const std::vector<std::size_t>& ids) {
    if (Pn.dim() != 3) throw UsageError("make_sites: expected 3-d points");
    std::vector<Vec2> proj;
    proj.reserve(ids.size());
    for (std::size_t id : ids) proj.push_back(to_vec2(Pn[id]));
    auto sites = make_sites(proj);
    for (auto& s : sites)
        for (auto& k : s.sources) k = ids[k];
    return sites;
}

inline std::vector<Site> make_sites(const PointSet& Pn) {
    std::vector<std::size_t> ids(Pn.size());
    std::iota(ids.begin(), ids.end(), std::size_t{0});
    return make_sites(Pn, std::move(ids));
}

/// Boundary between the regions won by s and by t: the ray
/// pts.front() + l*dir_in, the segments between consecutive pts, and the ray
/// pts.back() + l*dir_out. Traversed from the dir_in end, s is on the left.
struct Bisector {
    Vec2 dir_in;
    std::vector<Vec2> pts;
    Vec2 dir_out;
};

inline Bisector lex_bisector(const Vec2& s, const Vec2& t) {
    if (s == t) throw PreconditionError("lex_bisector: coincident sites");
    Vec2 d = t - s;
    Scalar ax = abs_of(d.x), ay = abs_of(d.y);
    const bool swap = ay > ax;
    const int sx = sgn(d.x) < 0 ? -1 : 1, sy = sgn(d.y) < 0 ? -1 : 1;
    const Scalar A = swap ? ay : ax, B = swap ? ax : ay;

    // Canonical frame: s at the origin, t at (A, B) with A > 0, 0 <= B <= A.
    Bisector c;
    const Scalar hA = half(A);
    if (sgn(B) == 0) {
        c.dir_in = {0, -1};
        c.pts = {{hA, 0}};
        c.dir_out = {0, 1};
    } else {
        c.dir_in = {1, -1};
        c.pts = {{hA, B - hA}};
        if (B != A) c.pts.push_back({hA, hA});
        c.dir_out = {-1, 1};
    }

    auto map = [&](const Vec2& v) -> Vec2 {
        return swap ? Vec2{sx * v.y, sy * v.x} : Vec2{sx * v.x, sy * v.y};
    };
    Bisector out;
    out.dir_in = map(c.dir_in);
    out.dir_out = map(c.dir_out);
    for (const auto& p : c.pts) out.pts.push_back(s + map(p));
    const bool reflects = (sx * sy > 0) == swap;
    if (reflects) {
        std::reverse(out.pts.begin(), out.pts.end());
        std::swap(out.dir_in, out.dir_out);
    }
    return out;
}

/// Star-shaped polygon around a site, counter-clockwise. labels[i] names the
/// site across the edge vertices[i] -> vertices[i+1], or -1 for the frame.
struct VoronoiCell {
    std::vector<Vec2> vertices;
    std::vector<long> labels;
    bool built = false;
};

namespace detail {

inline int angle_half(const Vec2& ref, const Vec2& e) {
    int c = sgn(cross(ref, e));
    return (c > 0 || (c == 0 && sgn(dot(ref, e)) > 0)) ? 0 : 1;
}

/// Counter-clockwise angle order starting at direction ref.
inline bool angle_less(const Vec2& ref, const Vec2& a, const Vec2& b) {
    int ha = angle_half(ref, a), hb = angle_half(ref, b);
    if (ha != hb) return ha < hb;
    return sgn(cross(a, b)) > 0;
}

inline bool same_direction(const Vec2& a, const Vec2& b) { return sgn(cross(a, b)) == 0 && sgn(dot(a, b)) > 0; }

// Where the ray s + l*e meets the line through p with direction u.
inline Vec2 ray_hit(const Vec2& s, const Vec2& e, const Vec2& p, const Vec2& u) {
    Scalar l = cross(p - s, u) / cross(e, u);
    return s + l * e;
}

inline Vec2 line_meet(const Vec2& p, const Vec2& u, const Vec2& q, const Vec2& w) {
    Scalar mu = cross(q - p, w) / cross(u, w);
    return p + mu * u;
}

inline void simplify_cell(VoronoiCell& cell) {
    const std::size_t m = cell.vertices.size();
    std::vector<char> drop(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t prev = (i + m - 1) % m, next = (i + 1) % m;
        if (cell.labels[prev] == cell.labels[i] &&
            sgn(cross(cell.vertices[i] - cell.vertices[prev], cell.vertices[next] - cell.vertices[i])) == 0)
            drop[i] = 1;
    }
    std::vector<Vec2> v;
    std::vector<long> l;
    for (std::size_t i = 0; i < m; ++i)
        if (!drop[i]) {
            v.push_back(std::move(cell.vertices[i]));
            l.push_back(cell.labels[i]);
        }
    cell.vertices = std::move(v);
    cell.labels = std::move(l);
}

/// Replaces the cell of site s by its part on s's side of the bisector with t.
inline void clip_cell(VoronoiCell& cell, const Vec2& s, const Bisector& b, long t) {
    const auto& V = cell.vertices;
    const std::size_t m = V.size();
    const Vec2& ref = b.dir_in;

    struct Ev {
        Vec2 e;
        int cv = -1, ch = -1;
    };
    std::vector<Ev> raw;
    raw.reserve(m + b.pts.size() + 2);
    for (std::size_t j = 0; j < m; ++j) raw.push_back({V[j] - s, static_cast<int>(j), -1});
    for (std::size_t i = 0; i < b.pts.size(); ++i) raw.push_back({b.pts[i] - s, -1, static_cast<int>(i)});
    raw.push_back({b.dir_in, -1, -1});
    raw.push_back({b.dir_out, -1, -1});
    std::sort(raw.begin(), raw.end(), [&](const Ev& x, const Ev& y) { return angle_less(ref, x.e, y.e); });

    std::vector<Ev> ev;
    for (auto& r : raw) {
        if (!ev.empty() && same_direction(ev.back().e, r.e)) {
            if (r.cv >= 0) {
                ev.back().cv = r.cv;
                ev.back().e = r.e;
            }
            if (r.ch >= 0) ev.back().ch = r.ch;
        } else {
            ev.push_back(std::move(r));
        }
    }
    const std::size_t E = ev.size();

    auto piece_line = [&](std::size_t piece) -> std::pair<Vec2, Vec2> {
        const std::size_t L = b.pts.size();
        if (piece == 0) return {b.pts[0], b.dir_in};
        if (piece == L) return {b.pts[L - 1], b.dir_out};
        return {b.pts[piece - 1], b.pts[piece] - b.pts[piece - 1]};
    };

    std::size_t first_cv = 0;
    while (ev[first_cv].cv < 0) ++first_cv;
    std::size_t cur_edge = (static_cast<std::size_t>(ev[first_cv].cv) + m - 1) % m;
    std::size_t cur_piece = 0;

    std::vector<std::size_t> edge_after(E), piece_after(E);
    std::vector<Vec2> pc(E), pt(E);
    std::vector<int> cmp(E, 1);
    std::vector<char> in_arc(E, 0);
    for (std::size_t k = 0; k < E; ++k) {
        const Ev& x = ev[k];
        if (x.cv >= 0) cur_edge = static_cast<std::size_t>(x.cv);
        if (x.ch >= 0) cur_piece = static_cast<std::size_t>(x.ch) + 1;
        edge_after[k] = cur_edge;
        piece_after[k] = cur_piece;
        pc[k] = x.cv >= 0 ? V[cur_edge] : ray_hit(s, x.e, V[cur_edge], V[(cur_edge + 1) % m] - V[cur_edge]);
        in_arc[k] = sgn(cross(ref, x.e)) > 0;
        if (!in_arc[k]) continue;
        if (x.ch >= 0) {
            pt[k] = b.pts[static_cast<std::size_t>(x.ch)];
        } else {
            auto [p, u] = piece_line(cur_piece);
            pt[k] = ray_hit(s, x.e, p, u);
        }
        cmp[k] = sgn(dot(pt[k] - s, x.e) - dot(pc[k] - s, x.e));
    }

    VoronoiCell out;
    out.built = cell.built;
    auto push = [&](const Vec2& p, long lab) {
        out.vertices.push_back(p);
        out.labels.push_back(lab);
    };
    for (std::size_t k = 0; k < E; ++k) {
        const std::size_t kn = (k + 1) % E;
        const std::size_t j = edge_after[k];
        const long cell_label = cell.labels[j];
        const Vec2& w = (in_arc[k] && cmp[k] < 0) ? pt[k] : pc[k];
        const bool wedge_in_arc = in_arc[k] || same_direction(ev[k].e, ref);
        if (!wedge_in_arc) {
            push(w, cell_label);
            continue;
        }
        const int a = cmp[k], z = cmp[kn];
        if ((a > 0 && z < 0) || (a < 0 && z > 0)) {
            auto [p, u] = piece_line(piece_after[k]);
            Vec2 x = line_meet(V[j], V[(j + 1) % m] - V[j], p, u);
            push(w, a > 0 ? cell_label : t);
            push(x, a > 0 ? t : cell_label);
        } else if (a < 0 || z < 0) {
            push(w, t);
        } else {
            push(w, cell_label);
        }
    }
    simplify_cell(out);
    cell = std::move(out);
}

inline VoronoiCell frame_cell(const Rect& frame) {
    VoronoiCell c;
    for (const auto& v : frame.corners()) c.vertices.push_back(v);
    c.labels.assign(4, -1);
    return c;
}

inline VoronoiCell compute_cell(std::size_t si, const std::vector<Site>& sites, const KdTree& tree,
                                const Rect& frame) {
    const Vec2& s = sites[si].location;
    VoronoiCell cell = frame_cell(frame);
    cell.built = true;
    const double sx = to_double(s.x), sy = to_double(s.y);

    double reach = 0, tol = 0;
    std::vector<std::array<double, 4>> petals;
    auto refresh = [&] {
        const std::size_t m = cell.vertices.size();
        std::vector<double> vx(m), vy(m), vd(m);
        reach = 0;
        for (std::size_t i = 0; i < m; ++i) {
            vx[i] = to_double(cell.vertices[i].x);
            vy[i] = to_double(cell.vertices[i].y);
            vd[i] = std::max(std::abs(vx[i] - sx), std::abs(vy[i] - sy));
            reach = std::max(reach, vd[i]);
        }
        tol = 1e-9 * (1.0 + reach + std::abs(sx) + std::abs(sy)) + tree.slack();
        petals.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t k = (i + 1) % m;
            petals[i] = {std::min(vx[i] - vd[i], vx[k] - vd[k]) - tol, std::max(vx[i] + vd[i], vx[k] + vd[k]) + tol,
                         std::min(vy[i] - vd[i], vy[k] - vd[k]) - tol, std::max(vy[i] + vd[i], vy[k] + vd[k]) + tol};
        }
    };
    refresh();

    // A site t matters only if some q in the cell has d(q, t) <= d(q, s),
    // which forces d(s, t) <= 2 * max_q d(q, s) and t into a petal box.
    KdTree::Walker walk(tree, s);
    std::size_t ti;
    double dist;
    while (walk.next(ti, dist)) {
        if (ti == si) continue;
        if (dist > 2 * reach + 2 * tol) break;
        const double tx = to_double(sites[ti].location.x), ty = to_double(sites[ti].location.y);
        bool near = false;
        for (const auto& p : petals)
            if (p[0] <= tx && tx <= p[1] && p[2] <= ty && ty <= p[3]) {
                near = true;
                break;
            }
        if (!near) continue;
        clip_cell(cell, s, lex_bisector(s, sites[ti].location), static_cast<long>(ti));
        refresh();
    }
    return cell;
}

}  // namespace detail

struct VdVertex {
    Vec2 point;
    std::vector<std::size_t> nearest;
};

struct VdEdge {
    std::size_t a, b;
    std::vector<Vec2> chain;
    std::vector<std::size_t> nearest;
};

struct VdCandidate {
    Vec2 point;
    std::vector<std::size_t> nearest;
};

class VoronoiDiagram {
public:
    /// Full diagram, clipped to a frame that strictly contains every site
    /// and the optional extra rectangle.
    static VoronoiDiagram build(std::vector<Site> sites, const std::optional<Rect>& include = std::nullopt) {
        check_sites(sites);
        std::vector<Vec2> locs;
        for (const auto& s : sites) locs.push_back(s.location);
        Rect box = Rect::bounding(locs);
        if (include) box = box.united(*include);
        Scalar extent = std::max(box.xhi - box.xlo, box.yhi - box.ylo);
        VoronoiDiagram vd(std::move(sites), box.expanded(extent + 1));
        for (std::size_t i = 0; i < vd.sites_.size(); ++i) vd.cells_[i] = detail::compute_cell(i, vd.sites_, vd.tree_, vd.frame_);
        vd.assemble();
        return vd;
    }

    /// Only the cells that can reach the focus rectangle; enough to answer
    /// every query inside it.
    static VoronoiDiagram build_near(std::vector<Site> sites, const Rect& focus) {
        check_sites(sites);
        const auto corners = focus.corners();
        std::optional<Scalar> reach;
        for (const auto& s : sites) {
            Scalar far = 0;
            for (const auto& c : corners) far = std::max(far, linf(s.location, c));
            if (!reach || far < *reach) reach = far;
        }
        Scalar margin = std::max({*reach, Scalar(focus.xhi - focus.xlo), Scalar(focus.yhi - focus.ylo)});
        margin = sgn(margin) > 0 ? Scalar(2 * margin) : Scalar(1);
        VoronoiDiagram vd(std::move(sites), focus.expanded(margin));
        for (std::size_t i = 0; i < vd.sites_.size(); ++i) {
            const Vec2& p = vd.sites_[i].location;
            Scalar gx = std::max({Scalar(focus.xlo - p.x), Scalar(0), Scalar(p.x - focus.xhi)});
            Scalar gy = std::max({Scalar(focus.ylo - p.y), Scalar(0), Scalar(p.y - focus.yhi)});
            if (std::max(gx, gy) <= *reach) vd.cells_[i] = detail::compute_cell(i, vd.sites_, vd.tree_, vd.frame_);
        }
        vd.assemble();
        return vd;
    }

    const std::vector<Site>& sites() const noexcept { return sites_; }
    const Rect& frame() const noexcept { return frame_; }
    const std::vector<VoronoiCell>& cells() const noexcept { return cells_; }
    const std::vector<VdVertex>& vertices() const noexcept { return vertices_; }
    const std::vector<VdEdge>& edges() const noexcept { return edges_; }
    const KdTree& tree() const noexcept { return tree_; }

    /// Whether q lies in the closed cell of site i.
    bool cell_contains(std::size_t i, const Vec2& q) const { return probe(i, q).first; }

    /// A site whose cell contains q; always an L-inf nearest site.
    std::size_t locate(const Vec2& q) const {
        if (!frame_.contains(q)) return tree_.nearest(q);
        std::size_t cur = tree_.nearest_approx(to_double(q.x), to_double(q.y));
        for (std::size_t step = 0; step <= sites_.size(); ++step) {
            if (!cells_[cur].built) break;
            auto [inside, edge] = probe(cur, q);
            if (inside) return cur;
            long next = cells_[cur].labels[edge];
            if (next < 0) break;
            cur = static_cast<std::size_t>(next);
        }
        return tree_.nearest(q);
    }

    Scalar nearest_distance(const Vec2& q) const { return linf(q, sites_[locate(q)].location); }

    /// All sites at minimum L-inf distance from q, ascending.
    std::vector<std::size_t> nearest_set(const Vec2& q) const { return tree_.within(q, nearest_distance(q)); }

private:
    VoronoiDiagram(std::vector<Site> sites, Rect frame)
        : sites_(std::move(sites)), frame_(std::move(frame)), cells_(sites_.size()) {
        std::vector<Vec2> locs;
        for (const auto& s : sites_) locs.push_back(s.location);
        tree_ = KdTree(std::move(locs));
    }

    static void check_sites(const std::vector<Site>& sites) {
        if (sites.empty()) throw UsageError("Voronoi diagram needs at least one site");
        std::vector<Vec2> locs;
        for (const auto& s : sites) locs.push_back(s.location);
        std::sort(locs.begin(), locs.end());
        if (std::adjacent_find(locs.begin(), locs.end()) != locs.end())
            throw PreconditionError("Voronoi sites must be pairwise distinct");
    }

    // (inside, index of the cell edge hit by the ray from the site through q)
    std::pair<bool, std::size_t> probe(std::size_t i, const Vec2& q) const {
        const VoronoiCell& c = cells_[i];
        if (!c.built) throw PreconditionError("cell was not computed");
        const Vec2& s = sites_[i].location;
        if (q == s) return {true, 0};
        const Vec2 e = q - s;
        const std::size_t m = c.vertices.size();
        for (std::size_t j = 0; j < m; ++j) {
            Vec2 a = c.vertices[j] - s, b = c.vertices[(j + 1) % m] - s;
            if (sgn(cross(a, e)) >= 0 && sgn(cross(e, b)) > 0) {
                bool inside = sgn(cross(c.vertices[(j + 1) % m] - c.vertices[j], q - c.vertices[j])) >= 0;
                return {inside, j};
            }
        }
        throw std::logic_error("VoronoiDiagram: cell does not surround its site");
    }

    void assemble() {
        std::vector<Vec2> pts;
        for (std::size_t i = 0; i < cells_.size(); ++i) {
            const VoronoiCell& c = cells_[i];
            if (!c.built) continue;
            const std::size_t m = c.vertices.size();
            for (std::size_t j = 0; j < m; ++j) {
                long in = c.labels[(j + m - 1) % m], out = c.labels[j];
                if (in >= 0 && out >= 0 && in != out) pts.push_back(c.vertices[j]);
            }
            // Maximal runs of edges shared with one neighbour, reported once per pair.
            std::size_t start = 0;
            while (start < m && c.labels[(start + m - 1) % m] == c.labels[start]) ++start;
            if (start == m) continue;
            for (std::size_t k = 0; k < m;) {
                std::size_t j = (start + k) % m;
                long lab = c.labels[j];
                std::size_t len = 1;
                while (k + len < m && c.labels[(start + k + len) % m] == lab) ++len;
                if (lab >= 0 && (static_cast<std::size_t>(lab) > i || !cells_[static_cast<std::size_t>(lab)].built)) {
                    VdEdge e{i, static_cast<std::size_t>(lab), {}, {}};
                    for (std::size_t r = 0; r <= len; ++r) e.chain.push_back(c.vertices[(j + r) % m]);
                    e.nearest = nearest_set(midpoint(e.chain[0], e.chain[1]));
                    edges_.push_back(std::move(e));
                }
                k += len;
            }
        }
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        for (auto& p : pts) {
            auto near = nearest_set(p);
            vertices_.push_back({std::move(p), std::move(near)});
        }
    }

    std::vector<Site> sites_;
    Rect frame_;
    std::vector<VoronoiCell> cells_;
    KdTree tree_;
    std::vector<VdVertex> vertices_;
    std::vector<VdEdge> edges_;
};

inline VoronoiDiagram build_vd(std::vector<Site> sites) { return VoronoiDiagram::build(std::move(sites)); }

/// Points of the rectangle where the nearest-site distance can peak: cell
/// vertices inside it (bends included), crossings of cell edges with its
/// sides, and its corners, each with its nearest-site set.
inline std::vector<VdCandidate> vd_candidates_in_rect(const VoronoiDiagram& vd, const Rect& C) {
    const auto corners = C.corners();
    std::vector<Segment2> sides;
    for (std::size_t i = 0; i < 4; ++i) sides.push_back({corners[i], corners[(i + 1) % 4]});

    std::vector<Vec2> pts(corners.begin(), corners.end());
    for (const auto& cell : vd.cells()) {
        if (!cell.built) continue;
        const std::size_t m = cell.vertices.size();
        for (std::size_t j = 0; j < m; ++j) {
            const Vec2& a = cell.vertices[j];
            const Vec2& b = cell.vertices[(j + 1) % m];
            if (C.contains(a)) pts.push_back(a);
            if (cell.labels[j] < 0) continue;
            if (std::max(a.x, b.x) < C.xlo || std::min(a.x, b.x) > C.xhi || std::max(a.y, b.y) < C.ylo ||
                std::min(a.y, b.y) > C.yhi)
                continue;
            for (const auto& side : sides)
                for (auto& p : intersect_segments({a, b}, side)) pts.push_back(std::move(p));
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::vector<VdCandidate> out;
    out.reserve(pts.size());
    for (auto& p : pts) {
        auto near = vd.nearest_set(p);
        out.push_back({std::move(p), std::move(near)});
    }
    return out;
}

inline std::vector<VdCandidate> vd_candidates_in_rect(const VoronoiDiagram& vd, const CenterDomain& C) {
    return vd_candidates_in_rect(vd, Rect::from_box(C.box));
}

}  // namespace cubeshell
