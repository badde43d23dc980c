#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

#include "icnoma/error.hpp"
#include "icnoma/gf2.hpp"

using icnoma::BitMatrix;
using icnoma::BitVector;

namespace {

// Unpacked reference: rows as vectors of 0/1.
using Naive = std::vector<std::vector<int>>;

Naive to_naive(const BitMatrix& m) {
    Naive out;
    for (const auto& r : m.rows()) {
        std::vector<int> row;
        for (std::size_t j = 0; j < m.col_count(); ++j) row.push_back(r.get(j) ? 1 : 0);
        out.push_back(row);
    }
    return out;
}

// Every element of the row space, by summing all 2^r subsets of rows.
std::set<std::vector<int>> naive_span(const Naive& rows, std::size_t cols) {
    std::set<std::vector<int>> span;
    const std::size_t r = rows.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
        std::vector<int> v(cols, 0);
        for (std::size_t i = 0; i < r; ++i) {
            if (mask >> i & 1U) {
                for (std::size_t j = 0; j < cols; ++j) v[j] ^= rows[i][j];
            }
        }
        span.insert(v);
    }
    return span;
}

std::size_t naive_rank(const Naive& rows, std::size_t cols) {
    const auto size = naive_span(rows, cols).size();
    std::size_t rank = 0;
    while ((std::size_t{1} << rank) < size) ++rank;
    return rank;
}

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    BitMatrix m(cols);
    for (std::size_t i = 0; i < rows; ++i) {
        BitVector v(cols);
        for (std::size_t j = 0; j < cols; ++j) {
            if (rng() & 1U) v.set(j);
        }
        m.append_row(v);
    }
    return m;
}

}  // namespace

TEST(Gf2Rank, IdentityAndZero) {
    EXPECT_EQ(icnoma::rank(BitMatrix::identity(3)), 3u);
    EXPECT_EQ(icnoma::rank(BitMatrix::from_strings({"0000", "0000"})), 0u);
}

TEST(Gf2Rank, DependentThirdRow) {
    const auto m = BitMatrix::from_strings({"1100", "0110", "1010"});
    EXPECT_EQ(naive_rank(to_naive(m), 4), 2u);
    EXPECT_EQ(icnoma::rank(m), 2u);
}

TEST(Gf2RowSpace, Examples) {
    EXPECT_TRUE(icnoma::row_space_contains(BitMatrix::identity(4), BitVector::from_string("0101")));
    EXPECT_FALSE(icnoma::row_space_contains(BitMatrix::from_strings({"1100"}), BitVector::from_string("0011")));
    EXPECT_TRUE(
        icnoma::row_space_contains(BitMatrix::from_strings({"1100", "0110"}), BitVector::from_string("1010")));
}

TEST(Gf2RowSpace, DimensionMismatchThrows) {
    EXPECT_THROW(icnoma::row_space_contains(BitMatrix::identity(3), BitVector::from_string("0101")),
                 icnoma::ValidationError);
}

TEST(Gf2Rref, Examples) {
    EXPECT_EQ(icnoma::rref(BitMatrix::identity(4)), BitMatrix::identity(4));
    EXPECT_EQ(icnoma::rref(BitMatrix::from_strings({"1100", "1100"})), BitMatrix::from_strings({"1100"}));
    const auto in = BitMatrix::from_strings({"0110", "1100"});
    const auto out = icnoma::rref(in);
    EXPECT_EQ(out, BitMatrix::from_strings({"1010", "0110"}));
    EXPECT_EQ(naive_span(to_naive(in), 4), naive_span(to_naive(out), 4));
}

TEST(Gf2Expression, Formatting) {
    EXPECT_EQ(BitVector::from_string("1001").to_expression(), "x1+x4");
    EXPECT_EQ(BitVector(3).to_expression(), "0");
    EXPECT_EQ(BitVector::unit(5, 2).to_string(), "00100");
}

TEST(Gf2Naive, CrossCheckRandomUpTo8x8) {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 3000; ++trial) {
        const std::size_t rows = rng() % 9;
        const std::size_t cols = 1 + rng() % 8;
        const auto m = random_matrix(rng, rows, cols);
        const auto naive = to_naive(m);
        const auto span = naive_span(naive, cols);

        ASSERT_EQ(icnoma::rank(m), naive_rank(naive, cols));

        const auto r = icnoma::rref(m);
        ASSERT_EQ(naive_span(to_naive(r), cols), span);
        ASSERT_EQ(r.row_count(), icnoma::rank(m));
        // pivots strictly increase, pivot columns are clear elsewhere
        for (std::size_t i = 0; i < r.row_count(); ++i) {
            const auto pi = r.row(i).lowest_set();
            if (i > 0) ASSERT_GT(pi, r.row(i - 1).lowest_set());
            for (std::size_t k = 0; k < r.row_count(); ++k) {
                if (k != i) ASSERT_FALSE(r.row(k).get(pi));
            }
        }

        BitVector v(cols);
        for (std::size_t j = 0; j < cols; ++j) {
            if (rng() & 1U) v.set(j);
        }
        std::vector<int> nv;
        for (std::size_t j = 0; j < cols; ++j) nv.push_back(v.get(j) ? 1 : 0);
        ASSERT_EQ(icnoma::row_space_contains(m, v), span.contains(nv));
    }
}

TEST(Gf2Properties, RankInvariants) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t cols = 1 + rng() % 20;
        const auto a = random_matrix(rng, rng() % 12, cols);
        const auto b = random_matrix(rng, rng() % 12, cols);
        EXPECT_EQ(icnoma::rank(a), icnoma::rank(icnoma::rref(a)));
        EXPECT_LE(icnoma::rank(icnoma::stack(a, b)), icnoma::rank(a) + icnoma::rank(b));
        EXPECT_LE(icnoma::rank(a), std::min(a.row_count(), cols));
        for (const auto& row : a.rows()) EXPECT_TRUE(icnoma::row_space_contains(a, row));

        BitVector v(cols);
        for (std::size_t j = 0; j < cols; ++j) {
            if (rng() & 1U) v.set(j);
        }
        BitMatrix one(cols);
        one.append_row(v);
        EXPECT_EQ(icnoma::row_space_contains(a, v), icnoma::rank(icnoma::stack(a, one)) == icnoma::rank(a));
    }
}

TEST(Gf2Wide, WordBoundary) {
    // 130 columns spans three 64-bit words.
    BitMatrix m(130);
    m.append_row(BitVector::unit(130, 0) ^ BitVector::unit(130, 129));
    m.append_row(BitVector::unit(130, 64) ^ BitVector::unit(130, 129));
    EXPECT_EQ(icnoma::rank(m), 2u);
    EXPECT_TRUE(icnoma::row_space_contains(m, BitVector::unit(130, 0) ^ BitVector::unit(130, 64)));
    EXPECT_FALSE(icnoma::row_space_contains(m, BitVector::unit(130, 129)));
}

TEST(Gf2Echelon, InsertReportsIndependence) {
    icnoma::EchelonBasis basis(4);
    EXPECT_TRUE(basis.insert(BitVector::from_string("1100")));
    EXPECT_TRUE(basis.insert(BitVector::from_string("0110")));
    EXPECT_FALSE(basis.insert(BitVector::from_string("1010")));
    EXPECT_EQ(basis.dimension(), 2u);
    EXPECT_TRUE(basis.contains(BitVector::from_string("1010")));
    EXPECT_FALSE(basis.contains(BitVector::from_string("0001")));
}
