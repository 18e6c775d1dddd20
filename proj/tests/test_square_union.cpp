#include "trivial_cases.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace cubeshell;
using namespace cubeshell::testing;

namespace {

std::vector<Square> random_squares(std::mt19937_64& rng, std::size_t n, const Scalar& r, long range) {
    std::vector<Square> out;
    auto centers = random_vec2s(rng, n, range, 1);
    for (std::size_t i = 0; i < n; ++i) out.push_back({centers[i], r, i});
    return out;
}

std::vector<Vec2> centers_of(const std::vector<Square>& s) {
    std::vector<Vec2> out;
    for (const auto& x : s) out.push_back(x.center);
    return out;
}

}  // namespace

TEST(ClipBall, RejectsBadInput) {
    EXPECT_THROW(clip_ball(Point{0, 0, 0}, Scalar(-1)), UsageError);
    EXPECT_THROW(clip_ball(Point{0, 0}, Scalar(1)), UsageError);
}

TEST(Union, MatchesTheArrangementOnRandomSquares) {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 20; ++rep) {
        const Scalar r(uniform_size(rng, 1, 6));
        auto sq = random_squares(rng, 20, r, 12);
        auto u = union_of_squares(sq);
        auto ref = arrangement_union(centers_of(sq), r);
        EXPECT_EQ(u.area, ref.area);
        EXPECT_EQ(u.vertices.size(), ref.vertex_count);
        EXPECT_LE(u.vertices.size(), 16 * sq.size());
    }
}

TEST(Union, ComplexityIsLinearOnDenseInput) {
    std::mt19937_64 rng(32);
    for (std::size_t n : {50u, 200u, 800u}) {
        auto sq = random_squares(rng, n, Scalar(5), 60);
        auto u = union_of_squares(sq);
        EXPECT_LE(u.vertices.size(), 16 * n);
        EXPECT_EQ(u.edges.size(), u.vertices.size());
    }
}

TEST(Union, DuplicatesAndNestingAreHarmless) {
    auto u = union_of_squares({{{0, 0}, 2, 0}, {{0, 0}, 2, 1}, {{1, 1}, 2, 2}});
    auto ref = arrangement_union({{0, 0}, {1, 1}}, Scalar(2));
    EXPECT_EQ(u.area, ref.area);
    EXPECT_EQ(u.vertices.size(), ref.vertex_count);
    EXPECT_EQ(u.component_count, 1u);
}

TEST(Union, CornerContactCountsBothCorners) {
    auto u = union_of_squares({{{0, 0}, 1, 0}, {{2, 2}, 1, 1}});
    auto ref = arrangement_union({{0, 0}, {2, 2}}, Scalar(1));
    EXPECT_EQ(u.vertices.size(), 8u);
    EXPECT_EQ(ref.vertex_count, 8u);
    EXPECT_EQ(u.area, 8);
}

TEST(Union, EmptyInputGivesAnEmptyBoundary) {
    auto u = union_of_squares({});
    EXPECT_TRUE(u.vertices.empty());
    EXPECT_TRUE(u.edges.empty());
    EXPECT_EQ(u.component_count, 0u);
    EXPECT_EQ(u.area, 0);
}

TEST(Union, UnequalRadiiAreRejected) {
    EXPECT_THROW(union_of_squares({{{0, 0}, 1, 0}, {{3, 0}, 2, 1}}), PreconditionError);
    EXPECT_THROW(union_of_squares({{{0, 0}, 0, 0}}), PreconditionError);
}

TEST(Union, EdgesCloseUpAtVertices) {
    std::mt19937_64 rng(33);
    for (int rep = 0; rep < 10; ++rep) {
        auto sq = random_squares(rng, 30, Scalar(3), 15);
        auto u = union_of_squares(sq);
        // Each vertex occurrence ends one horizontal and one vertical edge.
        std::map<Vec2, int> h, v, mult;
        for (const auto& p : u.vertices) ++mult[p];
        for (const auto& e : u.edges) {
            auto& m = (e.a.y == e.b.y) ? h : v;
            ++m[e.a];
            ++m[e.b];
        }
        for (const auto& p : u.vertices) {
            EXPECT_EQ(h[p], mult[p]);
            EXPECT_EQ(v[p], mult[p]);
        }
    }
}

TEST(Witness, IsOutsideEveryOpenSquare) {
    std::mt19937_64 rng(34);
    for (int rep = 0; rep < 200; ++rep) {
        PointSet P = random_grid_points(rng, uniform_size(rng, 3, 20), 3, 6);
        auto [Pn, n] = normalize(P);
        for (long k = 0; k <= 12; ++k) {
            const Scalar r = ratio(k, 2);
            auto d = decide(Pn, r);
            EXPECT_EQ(d.feasible, d.witness.has_value());
            if (!d.witness) continue;
            const Rect C = Rect::from_box(center_domain(Pn).box);
            EXPECT_TRUE(C.contains(*d.witness));
            EXPECT_GE(phi(Pn, to_point(*d.witness)), r);
        }
    }
}

TEST(Decide, AgreesWithBruteForce) {
    std::mt19937_64 rng(35);
    for (int rep = 0; rep < 150; ++rep) {
        PointSet P = rep % 2 ? random_grid_points(rng, uniform_size(rng, 3, 25), 3, 5)
                             : random_points(rng, uniform_size(rng, 3, 25), 3, 1000, 10);
        auto [Pn, n] = normalize(P);
        CoverageDecider dec(Pn, center_domain(Pn));
        for (const auto& v : oracle_values(Pn)) {
            EXPECT_EQ(dec.decide(v.value).feasible, brute_decide(Pn, v.value).has_value());
            Scalar above = v.value + Scalar(1, 3);
            EXPECT_EQ(dec.decide(above).feasible, brute_decide(Pn, above).has_value());
        }
    }
}

TEST(Decide, IsMonotone) {
    std::mt19937_64 rng(36);
    for (int rep = 0; rep < 50; ++rep) {
        PointSet P = random_points(rng, uniform_size(rng, 3, 40), 3, 10000, 100);
        auto [Pn, n] = normalize(P);
        CoverageDecider dec(Pn, center_domain(Pn));
        bool seen_false = false;
        for (long k = 0; k <= 200; ++k) {
            bool f = dec.decide(Scalar(k)).feasible;
            EXPECT_FALSE(f && seen_false);
            seen_false = seen_false || !f;
        }
    }
}

TEST(Decide, ThresholdIsSharpAtTheOracleValue) {
    std::mt19937_64 rng(37);
    PointSet P = random_points(rng, 25, 3, 10000, 100);
    auto [Pn, n] = normalize(P);
    const Scalar r = exact_oracle_3d(Pn).r;
    EXPECT_TRUE(decide(Pn, r).feasible);
    EXPECT_FALSE(decide(Pn, r + Scalar(1, 1000000000)).feasible);
}

TEST(Decide, RejectsNegativeLevelsAndPlanarInput) {
    EXPECT_THROW(decide(cube_corners(), Scalar(-1)), UsageError);
    EXPECT_THROW(decide(points({{0, 0}, {1, 1}}), Scalar(1)), UsageError);
}

TEST(Decide, LevelZeroIsAlwaysFeasible) {
    std::mt19937_64 rng(38);
    for (int rep = 0; rep < 30; ++rep) {
        auto [Pn, n] = normalize(random_points(rng, uniform_size(rng, 1, 20), 3));
        EXPECT_TRUE(decide(Pn, Scalar(0)).feasible);
    }
}
