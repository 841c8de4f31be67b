#include <gtest/gtest.h>

#include <random>

#include "dtop/fixtures.hpp"
#include "dtop/surface.hpp"

using namespace dtop;

namespace {

DigitalImage solid_block() {
    std::vector<Point> pts;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 3; ++z) pts.push_back(Point{x, y, z});
    return DigitalImage(3, AdjacencyKind::c(1), std::move(pts));
}

DigitalImage hollow_box() {
    std::vector<Point> pts;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 3; ++z)
                if (!(x == 1 && y == 1 && z == 1)) pts.push_back(Point{x, y, z});
    return DigitalImage(3, AdjacencyKind::c(1), std::move(pts));
}

}  // namespace

TEST(Classify, Mss6AllPointsHaveThreeNeighbours) {
    SurfaceClassification c = classify_neighbors(fixtures::mss6());
    EXPECT_EQ(c.bucket(3), 8);
    EXPECT_EQ(c.bucket(4), 0);
    EXPECT_EQ(c.bucket(5), 0);
    EXPECT_EQ(c.bucket(6), 0);
    EXPECT_TRUE(c.leftover.empty());
}

TEST(Classify, IntervalEndpointsLandInLeftover) {
    SurfaceClassification c = classify_neighbors(fixtures::interval(2));
    EXPECT_EQ(c.leftover.size(), 3u);  // counts 1, 2, 1
}

TEST(Classify, TotalsMatchImageSize) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coord(0, 3);
    for (int trial = 0; trial < 40; ++trial) {
        std::set<Point> pts;
        while (static_cast<int>(pts.size()) < 10) pts.insert(Point{coord(rng), coord(rng), coord(rng)});
        DigitalImage x(3, AdjacencyKind::c(1), std::vector<Point>(pts.begin(), pts.end()));
        SurfaceClassification c = classify_neighbors(x);
        Int total = static_cast<Int>(c.leftover.size());
        for (int i = 3; i <= 6; ++i) total += c.bucket(i);
        EXPECT_EQ(total, x.size());
    }
}

TEST(ClosedSurface, AcceptsMss6AndHollowBox) {
    EXPECT_TRUE(is_closed_surface(fixtures::mss6()).ok);
    EXPECT_TRUE(is_closed_surface(hollow_box()).ok);
}

TEST(ClosedSurface, RejectsSolidBlockAndCurves) {
    EXPECT_FALSE(is_closed_surface(solid_block()).ok);
    EXPECT_FALSE(is_closed_surface(fixtures::hex6()).ok);
    EXPECT_THROW(is_closed_surface(fixtures::msc4(4)), std::invalid_argument);  // dimension 2
}

TEST(ClosedSurface, AcceptsGenusFixtures) {
    SurfaceCheck g1 = is_closed_surface(fixtures::genus1());
    EXPECT_TRUE(g1.ok) << g1.reason;
    SurfaceCheck g2 = is_closed_surface(fixtures::genus2());
    EXPECT_TRUE(g2.ok) << g2.reason;
}

TEST(Genus, SphereLikeFixtures) {
    EXPECT_EQ(genus(fixtures::mss6()), 0);
    EXPECT_EQ(genus(hollow_box()), 0);
}

TEST(Genus, AuditedCornerCensusGenus1) {
    DigitalImage x = fixtures::genus1();
    EXPECT_EQ(x.size(), 128);
    SurfaceClassification c = classify_neighbors(x);
    EXPECT_EQ(c.bucket(3), 8);
    EXPECT_EQ(c.bucket(4), 112);
    EXPECT_EQ(c.bucket(5), 8);
    EXPECT_EQ(c.bucket(6), 0);
    EXPECT_EQ(genus(x), 1);
}

TEST(Genus, AuditedCornerCensusGenus2) {
    DigitalImage x = fixtures::genus2();
    EXPECT_EQ(x.size(), 198);
    SurfaceClassification c = classify_neighbors(x);
    EXPECT_EQ(c.bucket(3), 8);
    EXPECT_EQ(c.bucket(4), 174);
    EXPECT_EQ(c.bucket(5), 16);
    EXPECT_EQ(c.bucket(6), 0);
    EXPECT_EQ(genus(x), 2);
}

TEST(Genus, ErrorsOnNonSurfaces) {
    EXPECT_THROW(genus(solid_block()), std::invalid_argument);
    EXPECT_THROW(genus(fixtures::hex6()), std::invalid_argument);
}

TEST(Genus, InvariantUnderIsometry) {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> shift(-3, 3);
    DigitalImage x = fixtures::genus1();
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<int> perm = {0, 1, 2};
        std::shuffle(perm.begin(), perm.end(), rng);
        int ox = shift(rng), oy = shift(rng), oz = shift(rng);
        std::vector<Point> pts;
        for (const Point& p : x.points())
            pts.push_back(Point{p[perm[0]] + ox, p[perm[1]] + oy, p[perm[2]] + oz});
        DigitalImage y(3, AdjacencyKind::c(1), pts);
        EXPECT_EQ(genus(y), 1);
    }
}

TEST(Genus, WeightedCensusIdentity) {
    for (const DigitalImage& x : {fixtures::genus0(), fixtures::genus1(), fixtures::genus2()}) {
        SurfaceClassification c = classify_neighbors(x);
        Int weighted = c.bucket(5) + 2 * c.bucket(6) - c.bucket(3);
        EXPECT_EQ(8 * (genus(x) - 1), weighted);
    }
}
