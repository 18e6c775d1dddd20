#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace cubeshell;
using namespace cubeshell::testing;

namespace {

std::vector<Vec2> distinct(std::vector<Vec2> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<Vec2> locations(const VoronoiDiagram& vd) {
    std::vector<Vec2> out;
    for (const auto& s : vd.sites()) out.push_back(s.location);
    return out;
}

// Sites in general position: no shared coordinates, fine rational grid.
std::vector<Vec2> general_sites(std::mt19937_64& rng, std::size_t n) {
    while (true) {
        auto v = distinct(random_vec2s(rng, n, 1000000, 1000));
        std::set<Scalar> xs, ys;
        for (const auto& p : v) {
            xs.insert(p.x);
            ys.insert(p.y);
        }
        if (v.size() == n && xs.size() == n && ys.size() == n) return v;
    }
}

}  // namespace

TEST(Bisector, IsEquidistantAndLexicographic) {
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 300; ++rep) {
        auto v = random_vec2s(rng, 2, 6, 1);
        if (v[0] == v[1]) continue;
        Bisector b = lex_bisector(v[0], v[1]);
        for (const auto& p : b.pts) {
            EXPECT_EQ(linf(p, v[0]), linf(p, v[1]));
        }
        Vec2 a = b.pts.front() + Vec2{5 * b.dir_in.x, 5 * b.dir_in.y};
        Vec2 z = b.pts.back() + Vec2{5 * b.dir_out.x, 5 * b.dir_out.y};
        EXPECT_EQ(linf(a, v[0]), linf(a, v[1]));
        EXPECT_EQ(linf(z, v[0]), linf(z, v[1]));
        EXPECT_GT(cross(-b.dir_in, v[0] - b.pts.front()), 0);
        EXPECT_LT(cross(-b.dir_in, v[1] - b.pts.front()), 0);
    }
}

TEST(Voronoi, LocateFindsANearestSite) {
    std::mt19937_64 rng(42);
    for (int rep = 0; rep < 20; ++rep) {
        auto sites = rep % 2 ? distinct(random_vec2s(rng, 15)) : distinct(random_vec2s(rng, 40, 8, 1));
        auto vd = build_vd(make_sites(sites));
        auto locs = locations(vd);
        auto queries = random_vec2s(rng, 100, 12000, 100);
        for (const auto& q : queries) {
            std::size_t i = vd.locate(q);
            EXPECT_EQ(linf(q, locs[i]), linear_scan_distance(locs, q));
            EXPECT_TRUE(vd.cell_contains(i, q) || !vd.frame().contains(q));
        }
    }
}

TEST(Voronoi, VerticesAreEquidistantFromTheirSites) {
    std::mt19937_64 rng(43);
    for (int rep = 0; rep < 20; ++rep) {
        auto sites = rep % 2 ? distinct(random_vec2s(rng, 30)) : distinct(random_vec2s(rng, 30, 6, 1));
        auto vd = build_vd(make_sites(sites));
        auto locs = locations(vd);
        for (const auto& v : vd.vertices()) {
            ASSERT_GE(v.nearest.size(), 2u);
            const Scalar d = linear_scan_distance(locs, v.point);
            for (std::size_t s : v.nearest) EXPECT_EQ(linf(v.point, locs[s]), d);
        }
        for (const auto& e : vd.edges()) {
            ASSERT_GE(e.chain.size(), 2u);
            for (std::size_t k = 0; k + 1 < e.chain.size(); ++k) {
                Vec2 m = midpoint(e.chain[k], e.chain[k + 1]);
                EXPECT_EQ(linf(m, locs[e.a]), linf(m, locs[e.b]));
                EXPECT_EQ(linf(m, locs[e.a]), linear_scan_distance(locs, m));
            }
        }
    }
}

TEST(Voronoi, SizeIsLinear) {
    std::mt19937_64 rng(44);
    for (std::size_t n : {100u, 400u, 1600u}) {
        auto vd = build_vd(make_sites(distinct(random_vec2s(rng, n))));
        std::size_t total = 0;
        for (const auto& c : vd.cells()) total += c.vertices.size();
        EXPECT_LE(vd.vertices().size(), 4 * n);
        EXPECT_LE(vd.edges().size(), 6 * n);
        EXPECT_LE(total, 16 * n);
    }
}

TEST(Voronoi, CellsCoverTheFrameWithoutOverlap) {
    std::mt19937_64 rng(45);
    auto vd = build_vd(make_sites(distinct(random_vec2s(rng, 25, 20, 1))));
    auto locs = locations(vd);
    auto queries = random_vec2s(rng, 300, 2000, 100);
    for (const auto& q : queries) {
        std::size_t count = 0;
        for (std::size_t i = 0; i < locs.size(); ++i) {
            if (!vd.cell_contains(i, q)) continue;
            ++count;
            EXPECT_EQ(linf(q, locs[i]), linear_scan_distance(locs, q));
        }
        EXPECT_GE(count, 1u);
    }
}

TEST(Voronoi, FocusedBuildAnswersLikeTheFullOne) {
    std::mt19937_64 rng(46);
    for (int rep = 0; rep < 10; ++rep) {
        auto sites = distinct(random_vec2s(rng, 200));
        auto c = random_vec2s(rng, 2, 5000, 1);
        Rect focus{std::min(c[0].x, c[1].x), std::max(c[0].x, c[1].x), std::min(c[0].y, c[1].y),
                   std::max(c[0].y, c[1].y)};
        auto full = VoronoiDiagram::build(make_sites(sites), focus);
        auto near = VoronoiDiagram::build_near(make_sites(sites), focus);
        auto a = vd_candidates_in_rect(full, focus), b = vd_candidates_in_rect(near, focus);
        ASSERT_EQ(a.size(), b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            EXPECT_EQ(a[i].point, b[i].point);
            EXPECT_EQ(a[i].nearest, b[i].nearest);
        }
    }
}

TEST(Voronoi, DuplicateSitesAreRejected) {
    std::vector<Site> sites{{{0, 0}, {0}}, {{0, 0}, {1}}};
    EXPECT_THROW(build_vd(sites), PreconditionError);
    EXPECT_THROW(build_vd({}), UsageError);
}

TEST(Voronoi, MakeSitesMergesProjections) {
    PointSet P = points({{1, 2, 3}, {1, 2, -3}, {0, 0, 0}});
    auto sites = make_sites(P);
    ASSERT_EQ(sites.size(), 2u);
    std::size_t total = 0;
    for (const auto& s : sites) total += s.sources.size();
    EXPECT_EQ(total, 3u);
}

TEST(Candidates, MatchTheBruteForceEnumeration) {
    std::mt19937_64 rng(47);
    for (int rep = 0; rep < 30; ++rep) {
        auto sites = general_sites(rng, 15);
        auto c = random_vec2s(rng, 2, 1000000, 1000);
        Rect C{std::min(c[0].x, c[1].x), std::max(c[0].x, c[1].x), std::min(c[0].y, c[1].y),
               std::max(c[0].y, c[1].y)};
        auto vd = build_vd(make_sites(sites));
        auto locs = locations(vd);
        auto corners = C.corners();
        auto on_boundary = [&](const Vec2& p) { return p.x == C.xlo || p.x == C.xhi || p.y == C.ylo || p.y == C.yhi; };
        auto is_corner = [&](const Vec2& p) { return std::find(corners.begin(), corners.end(), p) != corners.end(); };

        // Bends (two nearest sites, interior) have no counterpart in the enumeration.
        std::set<Vec2> ours, theirs;
        for (const auto& cand : vd_candidates_in_rect(vd, C)) {
            ASSERT_TRUE(C.contains(cand.point));
            const Scalar d = linear_scan_distance(locs, cand.point);
            for (std::size_t s : cand.nearest) EXPECT_EQ(linf(cand.point, locs[s]), d);
            if (is_corner(cand.point) || cand.nearest.size() >= 3 || on_boundary(cand.point)) ours.insert(cand.point);
        }
        for (const auto& e : equidistant_points(locs, C)) theirs.insert(e.point);
        EXPECT_EQ(ours, theirs) << "instance " << rep;
    }
}

TEST(Candidates, MaximumDistanceMatchesAnExhaustiveSearch) {
    std::mt19937_64 rng(48);
    for (int rep = 0; rep < 60; ++rep) {
        auto sites = distinct(random_vec2s(rng, uniform_size(rng, 1, 25), 8, 1));
        auto c = random_vec2s(rng, 2, 8, 1);
        Rect C{std::min(c[0].x, c[1].x), std::max(c[0].x, c[1].x), std::min(c[0].y, c[1].y),
               std::max(c[0].y, c[1].y)};
        auto vd = build_vd(make_sites(sites));
        Scalar best = 0;
        for (const auto& cand : vd_candidates_in_rect(vd, C)) best = std::max(best, vd.nearest_distance(cand.point));
        // With integer sites and corners every candidate has half-integer coordinates.
        Scalar brute = 0;
        for (Scalar x = C.xlo; x <= C.xhi; x += Scalar(1, 2))
            for (Scalar y = C.ylo; y <= C.yhi; y += Scalar(1, 2))
                brute = std::max(brute, linear_scan_distance(locations(vd), {x, y}));
        EXPECT_EQ(best, brute) << "instance " << rep;
    }
}
