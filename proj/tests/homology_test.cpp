#include <gtest/gtest.h>

#include <random>

#include "dtop/complex.hpp"
#include "dtop/fixtures.hpp"

using namespace dtop;

namespace {

DigitalImage random_image(std::mt19937& rng, int max_points = 20) {
    std::uniform_int_distribution<int> dimd(1, 3), coord(0, 3), count(1, max_points);
    int m = dimd(rng);
    std::uniform_int_distribution<int> kd(1, m);
    std::set<Point> pts;
    int n = count(rng);
    int guard = 0;
    while (static_cast<int>(pts.size()) < n && ++guard < 500) {
        Point p;
        for (int i = 0; i < m; ++i) p.coords.push_back(coord(rng));
        pts.insert(p);
    }
    return DigitalImage(m, AdjacencyKind::c(kd(rng)),
                        std::vector<Point>(pts.begin(), pts.end()));
}

}  // namespace

TEST(CliqueComplex, Mss6HasOnlyVerticesAndEdges) {
    ChainComplex k(fixtures::mss6(), 4);
    EXPECT_EQ(k.basis_size(0), 8);
    EXPECT_EQ(k.basis_size(1), 12);
    EXPECT_EQ(k.basis_size(2), 0);
    EXPECT_EQ(k.basis_size(3), 0);
}

TEST(CliqueComplex, SquareUnder8IsASolidTetrahedron) {
    ChainComplex k(fixtures::msc4(8), 3);
    EXPECT_EQ(k.basis_size(0), 4);
    EXPECT_EQ(k.basis_size(1), 6);
    EXPECT_EQ(k.basis_size(2), 4);
    EXPECT_EQ(k.basis_size(3), 1);
}

TEST(CliqueComplex, Singleton) {
    DigitalImage x(1, AdjacencyKind::c(1), {Point{0}});
    ChainComplex k(x, 2);
    EXPECT_EQ(k.basis_size(0), 1);
    EXPECT_EQ(k.basis_size(1), 0);
    HomologyResult h = homology(k);
    EXPECT_EQ(h.betti(0), 1);
    EXPECT_EQ(h.betti(1), 0);
}

TEST(Boundary, DegreeZeroIsZeroMap) {
    ChainComplex k(fixtures::msc4(4), 2);
    EXPECT_EQ(k.boundary(0).rows(), 0);
    EXPECT_EQ(k.boundary(0).cols(), 4);
}

TEST(Boundary, SquaredIsZeroOnRandomImages) {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        DigitalImage x = random_image(rng);
        ChainComplex k(x, std::min(default_max_dim(x), 4));
        for (int q = 1; q < k.max_dim(); ++q) {
            if (k.basis_size(q + 1) == 0) continue;
            EXPECT_TRUE((k.boundary(q) * k.boundary(q + 1)).is_zero());
        }
    }
}

TEST(GoldenMss6, BoundaryColumnsMatchTheTwelveListedEdges) {
    VertexOrder order = VertexOrder::explicit_order(fixtures::mss6_golden_order());
    ChainComplex k(fixtures::mss6(), 4, order);
    auto edges = fixtures::mss6_golden_edges();
    ASSERT_EQ(edges.size(), 12u);
    const IntMatrix& d1 = k.boundary(1);
    for (const auto& [a, b] : edges) {
        int ra = k.rank_of(a), rb = k.rank_of(b);
        ASSERT_LT(ra, rb);  // listed increasing in the golden order
        int col = k.index_of(1, Simplex{ra, rb});
        ASSERT_GE(col, 0);
        for (int r = 0; r < d1.rows(); ++r) {
            Int expected = (r == rb) ? 1 : (r == ra ? -1 : 0);
            EXPECT_EQ(d1.at(r, col), expected);
        }
    }
}

TEST(GoldenMss6, CohomologyRanks) {
    VertexOrder order = VertexOrder::explicit_order(fixtures::mss6_golden_order());
    ChainComplex k(fixtures::mss6(), 4, order);
    CohomologyResult c = cohomology(k, Coefficients::integers());
    EXPECT_EQ(c.details[0].group.rank, 1);
    EXPECT_EQ(c.details[1].group.rank, 5);
    for (int q = 2; q <= 4; ++q) EXPECT_EQ(c.details[static_cast<size_t>(q)].group.rank, 0);
    for (const auto& d : c.details) EXPECT_TRUE(d.group.torsion.empty());
    // dim Im delta^0 and dim Ker delta^1
    EXPECT_EQ(c.details[1].coboundary_rank, 7);
    EXPECT_EQ(c.details[1].cocycle_rank, 12);
    // rank of the degree-1 boundary map itself
    EXPECT_EQ(rank(k.boundary(1)), 7);
    EXPECT_EQ(to_string(c.groups().at(1)), "Z^5");
}

TEST(GoldenMss6, ZerothCoboundaryRowsMatchListedCochains) {
    VertexOrder order = VertexOrder::explicit_order(fixtures::mss6_golden_order());
    ChainComplex k(fixtures::mss6(), 4, order);
    IntMatrix d0 = k.coboundary(0);  // 12 x 8
    // delta p0* = -e0 - e1 + e11 in the customary edge listing
    auto edges = fixtures::mss6_golden_edges();
    auto edge_col = [&](int i) {
        auto [a, b] = edges[static_cast<size_t>(i)];
        return k.index_of(1, Simplex{k.rank_of(a), k.rank_of(b)});
    };
    int p0 = k.rank_of(Point{1, 0, 0});
    std::map<int, Int> expected = {{edge_col(0), -1}, {edge_col(1), -1}, {edge_col(11), 1}};
    for (int r = 0; r < d0.rows(); ++r) {
        auto it = expected.find(r);
        EXPECT_EQ(d0.at(r, p0), it == expected.end() ? 0 : it->second);
    }
}

TEST(Homology, Mss6OverIntegers) {
    HomologyResult h = homology(ChainComplex(fixtures::mss6(), 4));
    EXPECT_EQ(h.betti(0), 1);
    EXPECT_EQ(h.betti(1), 5);
    EXPECT_EQ(h.betti(2), 0);
    EXPECT_TRUE(h.at(1).torsion.empty());
}

TEST(Betti, ThetaHasTwoLoops) { EXPECT_EQ(betti(fixtures::theta(), 1), 2); }

TEST(Betti, FourDimensionalCubeGraph) {
    // unit 4-cube under c_1: 16 vertices, 32 edges, no triangles
    std::vector<Point> pts;
    for (int m = 0; m < 16; ++m) pts.push_back(Point{m & 1, (m >> 1) & 1, (m >> 2) & 1, (m >> 3) & 1});
    DigitalImage x(4, AdjacencyKind::c(1), pts);
    EXPECT_EQ(x.edge_pairs().size(), 32u);
    EXPECT_EQ(betti(x, 1), 17);  // E - V + 1
}

TEST(Betti, IntervalIsATree) { EXPECT_EQ(betti(fixtures::interval(5), 1), 0); }

TEST(Betti, SquareCurveHasOneLoop) { EXPECT_EQ(betti(fixtures::msc4(4), 1), 1); }

TEST(Betti, InvariantUnderIsometry) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> shift(-4, 4), pick(0, 5);
    std::vector<DigitalImage> fixtures_list = {fixtures::theta(), fixtures::msc4(4),
                                               fixtures::mss6(), fixtures::hex6()};
    for (const DigitalImage& x : fixtures_list) {
        for (int trial = 0; trial < 50; ++trial) {
            int m = x.dimension();
            std::vector<int> perm(static_cast<size_t>(m));
            for (int i = 0; i < m; ++i) perm[static_cast<size_t>(i)] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<int> offs(static_cast<size_t>(m));
            std::vector<bool> flip(static_cast<size_t>(m));
            for (int i = 0; i < m; ++i) {
                offs[static_cast<size_t>(i)] = shift(rng);
                flip[static_cast<size_t>(i)] = pick(rng) % 2 == 0;
            }
            std::vector<Point> pts;
            for (const Point& p : x.points()) {
                Point q;
                for (int i = 0; i < m; ++i) {
                    int v = p[perm[static_cast<size_t>(i)]];
                    q.coords.push_back((flip[static_cast<size_t>(i)] ? -v : v) +
                                       offs[static_cast<size_t>(i)]);
                }
                pts.push_back(q);
            }
            DigitalImage y(m, x.kind(), pts);
            EXPECT_EQ(betti(y, 1), betti(x, 1));
        }
    }
}

TEST(Betti, EdgeVertexCountFormulaForTriangleFreeAdjacencies) {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 60; ++trial) {
        DigitalImage x = [&] {
            std::uniform_int_distribution<int> dimd(2, 3), coord(0, 3), count(2, 18);
            int m = dimd(rng);
            std::set<Point> pts;
            int n = count(rng);
            int guard = 0;
            while (static_cast<int>(pts.size()) < n && ++guard < 400) {
                Point p;
                for (int i = 0; i < m; ++i) p.coords.push_back(coord(rng));
                pts.insert(p);
            }
            return DigitalImage(m, AdjacencyKind::c(1), std::vector<Point>(pts.begin(), pts.end()));
        }();
        Int e = static_cast<Int>(x.edge_pairs().size());
        Int v = x.size();
        Int c = static_cast<Int>(components(x).size());
        EXPECT_EQ(betti(x, 1), e - v + c);
    }
}

TEST(Euler, AlternatingSumsAgreeOnTorsionFreeFixtures) {
    for (const DigitalImage& x : {fixtures::mss6(), fixtures::msc4(8), fixtures::theta()}) {
        ChainComplex k(x, default_max_dim(x));
        HomologyResult h = homology(k);
        Int chi_b = 0;
        for (size_t q = 0; q < h.groups.size(); ++q) {
            EXPECT_TRUE(h.groups[q].torsion.empty());
            chi_b += (q % 2 == 0 ? 1 : -1) * h.groups[q].rank;
        }
        EXPECT_EQ(k.euler_characteristic(), chi_b);
    }
}

TEST(Cohomology, RationalRanksMatchIntegerRanksWithoutTorsion) {
    ChainComplex k(fixtures::theta(), 2);
    CohomologyResult zc = cohomology(k, Coefficients::integers());
    CohomologyResult qc = cohomology(k, Coefficients::rationals());
    CohomologyResult pc = cohomology(k, Coefficients::prime_field(5));
    for (size_t q = 0; q < zc.details.size(); ++q) {
        EXPECT_EQ(zc.details[q].group.rank, qc.details[q].group.rank);
        EXPECT_EQ(zc.details[q].group.rank, pc.details[q].group.rank);
    }
}
