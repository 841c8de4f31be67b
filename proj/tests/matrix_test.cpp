#include <gtest/gtest.h>

#include <random>

#include "dtop/matrix.hpp"

using namespace dtop;

namespace {

// Independent rank oracle: fraction-free (Bareiss) Gaussian elimination.
int bareiss_rank(IntMatrix a) {
    int m = a.rows(), n = a.cols();
    Int prev = 1;
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int pivot = -1;
        for (int r = row; r < m; ++r)
            if (a.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row) a.swap_rows(pivot, row);
        for (int r = row + 1; r < m; ++r) {
            for (int c = col + 1; c < n; ++c)
                a.at(r, c) = checked_sub(checked_mul(a.at(r, c), a.at(row, col)),
                                         checked_mul(a.at(r, col), a.at(row, c))) /
                             prev;
            a.at(r, col) = 0;
        }
        prev = a.at(row, col);
        ++row;
    }
    return row;
}

IntMatrix random_matrix(std::mt19937& rng, int max_dim, int max_abs) {
    std::uniform_int_distribution<int> dim(1, max_dim), val(-max_abs, max_abs);
    IntMatrix a(dim(rng), dim(rng));
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) a.at(r, c) = val(rng);
    return a;
}

void check_smith_postconditions(const IntMatrix& a) {
    SmithForm s = smith_normal_form(a);
    // exact factorisation
    EXPECT_EQ(s.u * a * s.v, s.d);
    // unimodular transforms
    EXPECT_EQ(abs_val(determinant(s.u)), 1);
    EXPECT_EQ(abs_val(determinant(s.v)), 1);
    // diagonal with divisibility chain, zeros last
    for (int r = 0; r < s.d.rows(); ++r)
        for (int c = 0; c < s.d.cols(); ++c)
            if (r != c) {
                EXPECT_EQ(s.d.at(r, c), 0);
            }
    for (size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
        Int a0 = s.diagonal[i], b0 = s.diagonal[i + 1];
        EXPECT_GE(a0, 0);
        if (a0 == 0) {
            EXPECT_EQ(b0, 0);
        } else {
            EXPECT_EQ(b0 % a0, 0);
        }
    }
    EXPECT_EQ(s.rank, bareiss_rank(a));
}

}  // namespace

TEST(Smith, ZeroMatrix) {
    SmithForm s = smith_normal_form(IntMatrix(3, 2));
    EXPECT_EQ(s.rank, 0);
    EXPECT_EQ(s.u, IntMatrix::identity(3));
    EXPECT_EQ(s.v, IntMatrix::identity(2));
    EXPECT_TRUE(s.d.is_zero());
}

TEST(Smith, HandEliminatedExample) {
    IntMatrix a(2, 2, {2, 4, 6, 8});
    SmithForm s = smith_normal_form(a);
    ASSERT_EQ(s.diagonal.size(), 2u);
    EXPECT_EQ(s.diagonal[0], 2);
    EXPECT_EQ(s.diagonal[1], 4);
    EXPECT_EQ(s.u * a * s.v, s.d);
    EXPECT_EQ(determinant(a), -8);
}

TEST(Smith, DivisibilityChainNeedsMixing) {
    IntMatrix a(2, 2, {2, 0, 0, 3});
    SmithForm s = smith_normal_form(a);
    EXPECT_EQ(s.diagonal[0], 1);
    EXPECT_EQ(s.diagonal[1], 6);
    EXPECT_EQ(s.u * a * s.v, s.d);
}

TEST(Smith, RandomMatricesSatisfyPostconditions) {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix a = random_matrix(rng, 30, 9);
        check_smith_postconditions(a);
    }
}

TEST(Smith, TorsionShowsUp) {
    // boundary-like matrix with a factor of 2 (projective-plane style gluing)
    IntMatrix a(1, 1, {2});
    SmithForm s = smith_normal_form(a);
    EXPECT_EQ(s.diagonal[0], 2);
}

TEST(Arithmetic, HugeEntriesStayExact) {
    // arbitrary-precision backend: no wrapping at any magnitude
    Int big = Int(1) << 200;
    IntMatrix a(2, 2, {big, 1, 1, 1});
    SmithForm s = smith_normal_form(a);
    EXPECT_EQ(s.u * a * s.v, s.d);
    EXPECT_EQ(s.diagonal[0], 1);
    EXPECT_EQ(s.diagonal[1], big - 1);
    EXPECT_EQ(determinant(a), big - 1);
}

TEST(Kernel, BasisSpansNullSpace) {
    IntMatrix a(2, 3, {1, 2, 3, 2, 4, 6});  // rank 1
    auto basis = kernel_basis(a);
    ASSERT_EQ(basis.size(), 2u);
    for (const auto& v : basis) {
        for (int r = 0; r < a.rows(); ++r) {
            Int acc = 0;
            for (int c = 0; c < a.cols(); ++c) acc += a.at(r, c) * v[static_cast<size_t>(c)];
            EXPECT_EQ(acc, 0);
        }
    }
}

TEST(Determinant, SmallCases) {
    EXPECT_EQ(determinant(IntMatrix::identity(4)), 1);
    IntMatrix a(2, 2, {0, 1, 1, 0});
    EXPECT_EQ(determinant(a), -1);
    IntMatrix b(3, 3, {2, 0, 0, 0, 3, 0, 0, 0, 5});
    EXPECT_EQ(determinant(b), 30);
}

TEST(RankModP, DropsOnTorsionPrimes) {
    IntMatrix a(2, 2, {2, 0, 0, 2});
    EXPECT_EQ(rank(a), 2);
    EXPECT_EQ(rank_mod_p(a, 2), 0);
    EXPECT_EQ(rank_mod_p(a, 3), 2);
}
