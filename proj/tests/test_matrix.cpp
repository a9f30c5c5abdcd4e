// Copyright 2026 The pumgab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "pumgab/field.hpp"
#include "pumgab/matrix.hpp"
#include "testutil.hpp"

namespace pumgab {
namespace {

TEST(Matrix, RankNormOfSimpleVectors) {
    const auto f = ExtField::make(2, 4);
    EXPECT_EQ(rank_norm(*f, Vec{}), 0u);
    EXPECT_EQ(rank_norm(*f, Vec{f->zero(), f->zero()}), 0u);
    EXPECT_EQ(rank_norm(*f, Vec{f->one(), f->one()}), 1u);
    EXPECT_EQ(rank_norm(*f, Vec{Felt{1}, Felt{2}, Felt{3}}), 2u);
    EXPECT_EQ(rank_norm(*f, Vec{Felt{1}, Felt{2}, Felt{4}, Felt{8}}), 4u);
    EXPECT_EQ(hamming_weight(Vec{Felt{0}, Felt{5}, Felt{0}, Felt{1}}), 2u);
}

TEST(Matrix, RankNormAgreesWithBaseRankOddQ) {
    std::mt19937_64 rng(5);
    const auto f = ExtField::make(3, 3);
    for (int t = 0; t < 300; ++t) {
        const Vec v = testing::random_vec(*f, 4, rng);
        ASSERT_EQ(rank_norm(*f, v), rank_base(expand(*f, v)));
        ASSERT_LE(rank_norm(*f, v), hamming_weight(v));
    }
}

TEST(Matrix, RankNormIsAMetric) {
    std::mt19937_64 rng(9);
    const auto f = ExtField::make(2, 5);
    for (int t = 0; t < 2000; ++t) {
        const Vec a = testing::random_vec(*f, 4, rng), b = testing::random_vec(*f, 4, rng),
                  c = testing::random_vec(*f, 4, rng);
        const auto d = [&](const Vec& x, const Vec& y) { return rank_norm(*f, vec_sub(*f, x, y)); };
        ASSERT_EQ(d(a, b), d(b, a));
        ASSERT_EQ(d(a, a), 0u);
        ASSERT_LE(d(a, c), d(a, b) + d(b, c));
        ASSERT_EQ(d(a, b) == 0, a == b);
    }
}

TEST(Matrix, RrefRankAndNullspace) {
    std::mt19937_64 rng(13);
    const auto f = ExtField::make(2, 4);
    for (std::size_t r = 1; r <= 4; ++r) {
        for (std::size_t c = 1; c <= 5; ++c) {
            for (std::size_t k = 0; k <= std::min(r, c); ++k) {
                const MatExt m = testing::random_matrix_of_rank(f, r, c, k, rng);
                ASSERT_EQ(rank_ext(m), k);
                ASSERT_EQ(rref(m).rows(), k);
                const MatExt ns = nullspace_ext(m);
                ASSERT_EQ(ns.rows(), c - k);
                ASSERT_EQ(ns.cols(), c);
                if (ns.rows() > 0) {
                    ASSERT_TRUE(multiply(m, transpose(ns)).is_zero());
                    ASSERT_EQ(rank_ext(ns), c - k);
                }
            }
        }
    }
}

TEST(Matrix, BaseNullspace) {
    MatBase m(3, 2, 3);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 2) = 1;
    EXPECT_EQ(rank_base(m), 2u);
    const auto ns = nullspace_base(m);
    ASSERT_EQ(ns.size(), 1u);
    EXPECT_EQ((ns[0][0] + 2 * ns[0][1]) % 3, 0u);
    EXPECT_EQ(ns[0][2], 0u);
}

TEST(Matrix, StackAndSlice) {
    std::mt19937_64 rng(17);
    const auto f = ExtField::make(2, 3);
    const MatExt a = testing::random_matrix(f, 2, 3, rng), b = testing::random_matrix(f, 1, 3, rng);
    const MatExt v = vstack(a, b);
    EXPECT_EQ(row_slice(v, 0, 2), a);
    EXPECT_EQ(row_slice(v, 2, 1), b);
    const MatExt h = hstack(a, a);
    EXPECT_EQ(col_slice(h, 3, 3), a);
    EXPECT_EQ(transpose(transpose(h)), h);
    EXPECT_THROW(multiply(a, a), std::invalid_argument);
    EXPECT_THROW(vstack(a, transpose(a)), std::invalid_argument);
    const auto g = ExtField::make(2, 4);
    EXPECT_THROW(add(a, testing::random_matrix(g, 2, 3, rng)), std::invalid_argument);
}

TEST(Matrix, VecMatIsRowCombination) {
    std::mt19937_64 rng(19);
    const auto f = ExtField::make(2, 4);
    const MatExt m = testing::random_matrix(f, 3, 4, rng);
    const Vec u = testing::random_vec(*f, 3, rng);
    const MatExt um = multiply(MatExt::from_rows(f, {u}, 3), m);
    EXPECT_EQ(vec_mat(m, u), (Vec(um.row(0).begin(), um.row(0).end())));
}

TEST(Matrix, ForEachCombinationVisitsEveryCodeword) {
    std::mt19937_64 rng(23);
    const auto f = ExtField::make(2, 2);
    const MatExt m = testing::random_matrix(f, 3, 3, rng);
    std::vector<bool> seen(64, false);
    std::size_t visits = 0;
    for_each_combination(m, [&](std::uint64_t index, const Vec& u, const Vec& c) {
        ASSERT_LT(index, 64u);
        ASSERT_FALSE(seen[index]);
        seen[index] = true;
        ++visits;
        std::uint64_t expect = 0;
        for (std::size_t i = u.size(); i-- > 0;)
            expect = expect * 4 + u[i].value;
        ASSERT_EQ(index, expect);
        ASSERT_EQ(c, vec_mat(m, u));
    });
    EXPECT_EQ(visits, 64u);
}

// Every subset of columns of a Frobenius matrix on independent elements has
// full rank.
TEST(Matrix, FrobeniusMatrixColumnSubsets) {
    std::mt19937_64 rng(29);
    const auto f = ExtField::make(2, 4);
    for (int t = 0; t < 30; ++t) {
        for (std::size_t n = 1; n <= 4; ++n) {
            Vec a;
            do
                a = testing::random_vec(*f, n, rng);
            while (rank_norm(*f, a) != n);
            for (std::size_t m = 1; m <= 4; ++m) {
                const MatExt fm = frobenius_matrix(f, a, m);
                ASSERT_EQ(fm.rows(), m);
                for (std::size_t j = 0; j < n; ++j)
                    ASSERT_EQ(fm.at(m - 1, j), f->frobenius(a[j], static_cast<std::int64_t>(m - 1)));
                for (unsigned mask = 1; mask < (1u << n); ++mask) {
                    std::vector<Vec> cols;
                    for (std::size_t j = 0; j < n; ++j)
                        if (mask >> j & 1) {
                            Vec col(m);
                            for (std::size_t i = 0; i < m; ++i)
                                col[i] = fm.at(i, j);
                            cols.push_back(col);
                        }
                    const std::size_t w = cols.size();
                    ASSERT_EQ(rank_ext(MatExt::from_rows(f, cols, m)), std::min(w, m));
                }
            }
        }
    }
}

TEST(Matrix, SumRankWeightAndShapes) {
    const auto f = ExtField::make(2, 3);
    BlockSeq a(2, {{Felt{1}, Felt{2}}, {Felt{0}, Felt{0}}, {Felt{3}, Felt{3}}});
    EXPECT_EQ(sum_rank_weight(*f, a), 3u);
    EXPECT_EQ(hamming_weight(a), 4u);
    EXPECT_THROW(a.push_back({Felt{1}}), std::invalid_argument);
    BlockSeq b(2, {{Felt{1}, Felt{2}}});
    EXPECT_THROW(sum_rank_distance(*f, a, b), std::invalid_argument);
    EXPECT_EQ(sum_rank_distance(*f, a, a), 0u);
}

}  // namespace
}  // namespace pumgab
