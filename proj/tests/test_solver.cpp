#include "support.hpp"

#include <gtest/gtest.h>

using namespace cubeshell;
using namespace cubeshell::testing;

namespace {

void expect_consistent(const PointSet& P, const SolveResult& r) {
    EXPECT_TRUE(encloses(r.shell, P));
    EXPECT_TRUE(is_smallest_enclosing_cube(P, r.shell.center, r.shell.outer_radius));
    Shell best = best_shell_at(P, r.shell.center);
    EXPECT_EQ(best.outer_radius, r.shell.outer_radius);
    EXPECT_EQ(best.inner_radius, r.shell.inner_radius);
    EXPECT_FALSE(r.outer_contacts.empty());
    EXPECT_FALSE(r.inner_contacts.empty());
}

}  // namespace

TEST(Case1, MatchesTheLargestFeasiblePlateauLevel) {
    std::mt19937_64 rng(61);
    for (int rep = 0; rep < 40; ++rep) {
        auto [Pn, n] = normalize(random_points(rng, 30, 3));
        auto c1 = solve_case1(Pn);
        ASSERT_TRUE(c1);
        Scalar want = -1;
        for (const auto& p : Pn)
            if (brute_decide(Pn, abs_of(p[2]))) want = std::max(want, abs_of(p[2]));
        EXPECT_EQ(c1->level, want);
        EXPECT_GE(phi(Pn, to_point(c1->center)), c1->level);
    }
}

TEST(Case2, CandidatesAreExactAndTheMaxIsTheOptimum) {
    std::mt19937_64 rng(62);
    for (int rep = 0; rep < 40; ++rep) {
        auto [Pn, n] = normalize(random_points(rng, 30, 3));
        auto c1 = solve_case1(Pn);
        auto c2 = solve_case2(Pn, c1->level);
        const Scalar r = exact_oracle_3d(Pn).r;
        EXPECT_LE(c1->level, r);
        if (c2) {
            EXPECT_EQ(phi(Pn, to_point(c2->center)), c2->level);
            EXPECT_LE(c2->level, r);
        }
        EXPECT_EQ(std::max(c1->level, c2 ? c2->level : Scalar(0)), r);
    }
}

TEST(Solve3d, MatchesTheOracleOnUniformInstances) {
    std::mt19937_64 rng(63);
    for (int rep = 0; rep < 120; ++rep) {
        PointSet P = random_points(rng, uniform_size(rng, 3, 40), 3);
        auto r = solve3d(P);
        auto [Pn, n] = normalize(P);
        EXPECT_EQ(r.width(), r.shell.outer_radius - exact_oracle_3d(Pn).r);
        EXPECT_EQ(r.inner_level, r.shell.inner_radius);
        expect_consistent(P, r);
    }
}

TEST(Solve3d, MatchesTheOracleOnDegenerateInstances) {
    std::mt19937_64 rng(64);
    for (int rep = 0; rep < 300; ++rep) {
        PointSet P = random_grid_points(rng, uniform_size(rng, 1, 14), 3, 1 + rep % 4);
        if (rep % 5 == 0) {
            // Flatten one axis.
            std::vector<Point> v;
            for (const auto& p : P) v.push_back(Point{p[0], p[1], Scalar(0)});
            P = PointSet(std::move(v));
        }
        auto r = solve3d(P);
        auto [Pn, n] = normalize(P);
        EXPECT_EQ(r.shell.inner_radius, exact_oracle_3d(Pn).r) << "instance " << rep;
        expect_consistent(P, r);
    }
}

TEST(Solve3d, CenterLiesInTheDomain) {
    std::mt19937_64 rng(65);
    for (int rep = 0; rep < 50; ++rep) {
        PointSet P = random_points(rng, uniform_size(rng, 3, 60), 3);
        auto r = solve3d(P);
        auto [Pn, n] = normalize(P);
        CenterDomain C = center_domain(Pn);
        Point c = n.apply(r.shell.center);
        EXPECT_EQ(c[2], 0);
        EXPECT_TRUE(C.box.contains(Point{c[0], c[1]}));
    }
}

TEST(Solve3d, SmallInputs) {
    auto one = solve3d(points({{4, 5, 6}}));
    EXPECT_EQ(one.width(), 0);
    EXPECT_EQ(one.shell.center, (Point{4, 5, 6}));
    auto two = solve3d(points({{0, 0, 0}, {3, 1, -2}}));
    EXPECT_EQ(two.width(), 0);
    EXPECT_EQ(two.shell.outer_radius, Scalar(3, 2));
}

TEST(Solve3d, IsEquivariant) {
    std::mt19937_64 rng(66);
    for (int rep = 0; rep < 30; ++rep) {
        PointSet P = random_points(rng, uniform_size(rng, 3, 30), 3);
        const Scalar w = solve3d(P).width();
        std::vector<std::size_t> perm{0, 1, 2};
        std::shuffle(perm.begin(), perm.end(), rng);
        const Scalar s = ratio(static_cast<long>(uniform_size(rng, 1, 9)), static_cast<long>(uniform_size(rng, 1, 9)));
        std::vector<Point> moved;
        for (const auto& p : P) {
            std::vector<Scalar> c(3);
            for (std::size_t i = 0; i < 3; ++i) c[i] = (rep % 2 ? -1 : 1) * s * p[perm[i]] + ratio(static_cast<long>(i) + 1, 7);
            moved.emplace_back(std::move(c));
        }
        EXPECT_EQ(solve3d(PointSet(std::move(moved))).width(), s * w);
    }
}

TEST(Solve2d, MatchesTheBreakpointOracle) {
    std::mt19937_64 rng(67);
    for (int rep = 0; rep < 150; ++rep) {
        PointSet P = rep % 3 ? random_points(rng, uniform_size(rng, 1, 40), 2)
                             : random_grid_points(rng, uniform_size(rng, 1, 12), 2, 4);
        auto r = solve2d(P);
        auto [Pn, n] = normalize(P);
        EXPECT_EQ(r.shell.inner_radius, breakpoint_oracle_2d(Pn).first);
        expect_consistent(P, r);
    }
}

TEST(Solve1d, IsTheMidpointShell) {
    std::mt19937_64 rng(68);
    for (int rep = 0; rep < 50; ++rep) {
        PointSet P = random_points(rng, uniform_size(rng, 1, 20), 1);
        auto r = solve1d(P);
        expect_consistent(P, r);
    }
}

TEST(Solve, RejectsWrongDimensions) {
    EXPECT_THROW(solve3d(points({{0, 0}})), UsageError);
    EXPECT_THROW(solve2d(points({{0, 0, 0}})), UsageError);
    EXPECT_THROW(solve1d(points({{0, 0}})), UsageError);
    try {
        solve(points({{0, 0, 0, 0, 0}}));
        FAIL();
    } catch (const UnsupportedDimension& e) {
        EXPECT_EQ(e.dimension(), 5u);
    }
}

TEST(Solve, CaseTagsAreReported) {
    EXPECT_EQ(solve3d(cube_corners()).tag, CaseTag::both);
    EXPECT_EQ(to_string(CaseTag::voronoi), "voronoi");
    // Only level 0 is feasible here; the optimum comes from the Voronoi candidates.
    auto r = solve3d(points({{0, 0, 5}, {0, 0, -5}, {3, 4, 0}, {-4, 1, 0}, {2, -3, 0}}));
    EXPECT_EQ(r.tag, CaseTag::voronoi);
    EXPECT_EQ(*r.r1, 0);
}
