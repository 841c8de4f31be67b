#include <gtest/gtest.h>

#include <random>

#include "dtop/core.hpp"
#include "dtop/fixtures.hpp"

using namespace dtop;

TEST(Adjacent, UnitStepsUnderC1) {
    EXPECT_TRUE(adjacent(Point{0, 0, 0}, Point{1, 0, 0}, AdjacencyKind::c(1)));
    EXPECT_TRUE(adjacent(Point{1, 1, 0}, Point{1, 1, 1}, AdjacencyKind::c(1)));
    EXPECT_FALSE(adjacent(Point{0, 0}, Point{1, 1}, AdjacencyKind::from_alias(4, 2)));
    EXPECT_TRUE(adjacent(Point{0, 0}, Point{1, 1}, AdjacencyKind::from_alias(8, 2)));
}

TEST(Adjacent, ErrorsOnBadInput) {
    EXPECT_THROW(adjacent(Point{0, 0}, Point{0, 0, 0}, AdjacencyKind::c(1)), std::invalid_argument);
    EXPECT_THROW(adjacent(Point{1, 2}, Point{1, 2}, AdjacencyKind::c(1)), std::invalid_argument);
}

TEST(Adjacent, SymmetricAndIrreflexiveOnRandomPairs) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coord(-3, 3), dimd(1, 4);
    for (int trial = 0; trial < 500; ++trial) {
        int m = dimd(rng);
        std::uniform_int_distribution<int> kd(1, m);
        AdjacencyKind kind = AdjacencyKind::c(kd(rng));
        Point p, q;
        for (int i = 0; i < m; ++i) {
            p.coords.push_back(coord(rng));
            q.coords.push_back(coord(rng));
        }
        if (p == q) continue;
        EXPECT_EQ(adjacent(p, q, kind), adjacent(q, p, kind));
    }
}

TEST(Neighbors, Mss6CornerHasThree) {
    DigitalImage x = fixtures::mss6();
    std::vector<Point> n = neighbors(x, Point{1, 0, 0});
    std::vector<Point> expected = {{0, 0, 0}, {1, 0, 1}, {1, 1, 0}};
    EXPECT_EQ(n, expected);
}

TEST(Neighbors, SingletonHasNone) {
    DigitalImage x(2, AdjacencyKind::c(1), {Point{5, 5}});
    EXPECT_TRUE(neighbors(x, Point{5, 5}).empty());
    EXPECT_THROW(neighbors(x, Point{0, 0}), std::invalid_argument);
}

TEST(Neighbors, ThetaMiddleBarPoint) {
    DigitalImage x = fixtures::theta();
    std::vector<Point> n = neighbors(x, Point{2, 1});
    std::vector<Point> expected = {{2, 0}, {2, 2}};
    EXPECT_EQ(n, expected);
}

TEST(Components, Mss6IsConnectedWithTwelveEdges) {
    DigitalImage x = fixtures::mss6();
    EXPECT_EQ(components(x).size(), 1u);
    EXPECT_EQ(x.edge_pairs().size(), 12u);
}

TEST(Components, FarApartPointsSplit) {
    DigitalImage x(2, AdjacencyKind::c(1), {Point{0, 0}, Point{5, 5}});
    EXPECT_EQ(components(x).size(), 2u);
    EXPECT_FALSE(is_connected(x));
}

TEST(Components, FormAPartition) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coord(0, 4);
    for (int trial = 0; trial < 50; ++trial) {
        std::set<Point> pts;
        int n = 1 + trial % 15;
        while (static_cast<int>(pts.size()) < n) pts.insert(Point{coord(rng), coord(rng)});
        DigitalImage x(2, AdjacencyKind::c(1), std::vector<Point>(pts.begin(), pts.end()));
        auto parts = components(x);
        std::set<int> seen;
        for (const auto& part : parts) {
            ASSERT_FALSE(part.empty());
            for (int i : part) EXPECT_TRUE(seen.insert(i).second);
        }
        EXPECT_EQ(static_cast<int>(seen.size()), x.size());
        // each part is itself connected
        for (const auto& part : parts) {
            std::vector<Point> pts;
            for (int i : part) pts.push_back(x.point(i));
            EXPECT_TRUE(is_connected(induced_subimage(x, pts)));
        }
        // no adjacency across parts
        for (size_t a = 0; a < parts.size(); ++a)
            for (size_t b = a + 1; b < parts.size(); ++b)
                for (int i : parts[a])
                    for (int j : parts[b]) EXPECT_FALSE(x.adjacent_indices(i, j));
    }
}

TEST(Continuity, IdentityAndConstant) {
    DigitalImage x = fixtures::theta();
    EXPECT_TRUE(is_continuous(DigitalMap::identity(x)));
    EXPECT_TRUE(is_continuous(DigitalMap::constant(x, Point{2, 2})));
}

TEST(Continuity, XorMultiplicationOnIntervalSquare) {
    DigitalImage i1 = fixtures::interval(1);
    DigitalImage sq = product(i1, i1);
    std::vector<std::pair<Point, Point>> pairs;
    for (const Point& p : sq.points()) pairs.push_back({p, Point{p[0] == p[1] ? 0 : 1}});
    DigitalMap xor_mul = DigitalMap::from_pairs(sq, i1, pairs);
    EXPECT_TRUE(is_continuous(xor_mul));
}

TEST(Continuity, CompositionStaysContinuous) {
    DigitalImage x = fixtures::msc4(4);
    // fold the square one step, twice
    auto fold = DigitalMap::from_pairs(
        x, x, {{{0, 0}, {0, 0}}, {{1, 0}, {0, 0}}, {{1, 1}, {1, 0}}, {{0, 1}, {0, 0}}});
    ASSERT_TRUE(is_continuous(fold));
    std::vector<int> table;
    for (int i = 0; i < x.size(); ++i) table.push_back(fold.apply_index(fold.apply_index(i)));
    DigitalMap composed(x, x, table);
    EXPECT_TRUE(is_continuous(composed));
}

TEST(Continuity, RandomCompositionsStayContinuous) {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> coord(0, 2);
    int composed_checked = 0;
    for (int trial = 0; trial < 200 && composed_checked < 40; ++trial) {
        std::set<Point> pts;
        int n = 2 + trial % 7;
        while (static_cast<int>(pts.size()) < n) pts.insert(Point{coord(rng), coord(rng)});
        DigitalImage x(2, AdjacencyKind::c(1), std::vector<Point>(pts.begin(), pts.end()));
        std::uniform_int_distribution<int> pick(0, x.size() - 1);
        auto random_continuous = [&]() -> std::optional<DigitalMap> {
            for (int attempt = 0; attempt < 200; ++attempt) {
                std::vector<int> table;
                for (int i = 0; i < x.size(); ++i) table.push_back(pick(rng));
                DigitalMap f(x, x, table);
                if (is_continuous(f)) return f;
            }
            return std::nullopt;
        };
        auto f = random_continuous();
        auto g = random_continuous();
        if (!f || !g) continue;
        std::vector<int> table;
        for (int i = 0; i < x.size(); ++i) table.push_back(g->apply_index(f->apply_index(i)));
        EXPECT_TRUE(is_continuous(DigitalMap(x, x, table)));
        ++composed_checked;
    }
    EXPECT_GE(composed_checked, 20);
}

TEST(Isomorphism, CoordinatePermutationOnMss6) {
    DigitalImage x = fixtures::mss6();
    std::vector<std::pair<Point, Point>> pairs;
    for (const Point& p : x.points()) pairs.push_back({p, Point{p[2], p[0], p[1]}});
    EXPECT_TRUE(is_isomorphism(DigitalMap::from_pairs(x, x, pairs)));
}

TEST(Isomorphism, ConstantIsNot) {
    DigitalImage x(1, AdjacencyKind::c(1), {Point{0}, Point{1}});
    EXPECT_FALSE(is_isomorphism(DigitalMap::constant(x, Point{0})));
}

TEST(Isomorphism, SquareInto8AdjacencyIsOnlyOneWayContinuous) {
    DigitalImage c4 = fixtures::msc4(4);
    DigitalImage k4 = fixtures::msc4(8);
    std::vector<std::pair<Point, Point>> pairs;
    for (const Point& p : c4.points()) pairs.push_back({p, p});
    DigitalMap f = DigitalMap::from_pairs(c4, k4, pairs);
    EXPECT_TRUE(is_continuous(f));
    EXPECT_FALSE(is_isomorphism(f));
    DigitalMap back = DigitalMap::from_pairs(k4, c4, pairs);
    EXPECT_FALSE(is_continuous(back));
}

TEST(Product, IntervalSquareHasSixAdjacentPairs) {
    DigitalImage i1 = fixtures::interval(1);
    DigitalImage sq = product(i1, i1);
    EXPECT_EQ(sq.size(), 4);
    EXPECT_EQ(sq.edge_pairs().size(), 6u);
}

TEST(Product, WithSingletonKeepsAdjacency) {
    DigitalImage x = fixtures::theta();
    DigitalImage one(1, AdjacencyKind::c(1), {Point{9}});
    DigitalImage p = product(x, one);
    EXPECT_EQ(p.size(), x.size());
    EXPECT_EQ(p.edge_pairs().size(), x.edge_pairs().size());
}

TEST(Product, ThetaSquaredCardinality) {
    DigitalImage x = fixtures::theta();
    EXPECT_EQ(product(x, x).size(), x.size() * x.size());
}

TEST(Product, DegreeFormulaAgainstEnumeration) {
    DigitalImage a = fixtures::msc4(4);
    DigitalImage b = fixtures::interval(2);
    DigitalImage p = product(a, b);
    for (int i = 0; i < a.size(); ++i) {
        for (int j = 0; j < b.size(); ++j) {
            Point pt = concat(a.point(i), b.point(j));
            int deg = static_cast<int>(p.neighbor_indices(p.require_index(pt)).size());
            int da = static_cast<int>(a.neighbor_indices(i).size());
            int db = static_cast<int>(b.neighbor_indices(j).size());
            EXPECT_EQ(deg, da * db + da + db);
        }
    }
}

TEST(Wedge, SquaresAtOriginAreValid) {
    WedgeCheck c = check_wedge(fixtures::msc6(), fixtures::msc6_mirror(), Point{0, 0, 0});
    EXPECT_TRUE(c.ok) << c.reason;
    DigitalImage w = fixtures::msc6_wedge();
    EXPECT_EQ(w.size(), 7);
    // symmetric in the two arguments
    EXPECT_TRUE(check_wedge(fixtures::msc6_mirror(), fixtures::msc6(), Point{0, 0, 0}).ok);
}

TEST(Wedge, RejectsDoubleOverlap) {
    DigitalImage a = fixtures::msc4(4);
    DigitalImage b(2, AdjacencyKind::c(1), {Point{1, 0}, Point{1, 1}, Point{2, 0}, Point{2, 1}});
    WedgeCheck c = check_wedge(a, b, Point{1, 0});
    EXPECT_FALSE(c.ok);
    EXPECT_THROW(wedge(a, b, Point{1, 0}), std::invalid_argument);
}

TEST(Wedge, RejectsCrossAdjacencyUnder8) {
    DigitalImage a = fixtures::msc4(8);
    DigitalImage b(2, AdjacencyKind::from_alias(8, 2),
                   {Point{1, 1}, Point{2, 1}, Point{2, 2}, Point{1, 2}});
    WedgeCheck c = check_wedge(a, b, Point{1, 1});
    EXPECT_FALSE(c.ok);  // e.g. (1,0) and (2,1) touch diagonally
}

TEST(SimpleClosedCurve, SquareUnder4ButNotUnder8) {
    EXPECT_TRUE(is_simple_closed_curve(fixtures::msc4(4)));
    EXPECT_FALSE(is_simple_closed_curve(fixtures::msc4(8)));
    EXPECT_FALSE(is_simple_closed_curve(fixtures::interval(3)));
    EXPECT_TRUE(is_simple_closed_curve(fixtures::hex6()));
}

TEST(Graph, GirthAndDiameter) {
    EXPECT_EQ(girth(fixtures::msc4(4)), 4);
    EXPECT_EQ(girth(fixtures::hex6()), 6);
    EXPECT_EQ(girth(fixtures::theta()), 8);
    EXPECT_EQ(girth(fixtures::interval(3)), 0);
    EXPECT_EQ(diameter(fixtures::interval(3)), 3);
}

TEST(Registry, LoadsAndValidates) {
    FixtureRegistry reg;
    EXPECT_TRUE(reg.has("mss6"));
    EXPECT_TRUE(reg.has("interval3"));
    EXPECT_FALSE(reg.has("nope"));
    EXPECT_EQ(reg.get("interval3").size(), 4);
    EXPECT_EQ(reg.get("theta").size(), 15);
    EXPECT_THROW(reg.get("nope"), std::invalid_argument);
}
