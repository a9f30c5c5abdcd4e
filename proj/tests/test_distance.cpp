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

#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "pumgab/distance.hpp"
#include "testutil.hpp"

namespace pumgab {
namespace {

// Trellis over the full memory u_{j-1} (no state merging), written
// independently of the library search.
std::vector<std::optional<std::size_t>> full_state_profile(const UnitMemoryEncoder& e, std::size_t L, Metric metric) {
    const auto& f = e.g0.field();
    const std::size_t k = e.g0.rows();
    std::uint64_t inputs = 1;
    for (std::size_t i = 0; i < k; ++i)
        inputs *= f.order();
    std::vector<Vec> us(inputs);
    for (std::uint64_t idx = 0; idx < inputs; ++idx) {
        Vec u(k);
        std::uint64_t x = idx;
        for (auto& c : u) {
            c = Felt{static_cast<std::uint32_t>(x % f.order())};
            x /= f.order();
        }
        us[idx] = u;
    }
    auto weight = [&](const Vec& v) { return metric == Metric::sum_rank ? rank_norm(f, v) : hamming_weight(v); };
    constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> pot(inputs, inf);
    pot[0] = 0;
    std::vector<std::optional<std::size_t>> out;
    for (std::size_t layer = 1; layer <= L; ++layer) {
        std::vector<std::size_t> next(inputs, inf);
        for (std::uint64_t prev = 0; prev < inputs; ++prev) {
            if (pot[prev] == inf)
                continue;
            const Vec mem = vec_mat(e.g1, us[prev]);
            for (std::uint64_t cur = 1; cur < inputs; ++cur) {
                const Vec c = vec_add(f, vec_mat(e.g0, us[cur]), mem);
                next[cur] = std::min(next[cur], pot[prev] + weight(c));
            }
        }
        pot = next;
        std::optional<std::size_t> d;
        for (std::uint64_t u = 1; u < inputs; ++u)
            if (pot[u] != inf && vec_is_zero(vec_mat(e.g1, us[u])))
                d = d ? std::min(*d, pot[u]) : pot[u];
        out.push_back(d);
    }
    return out;
}

PumCode small_pum() { return build_code({ExtField::make(2, 6), 3, 2, 1, 1}); }

TEST(Distance, SmallPumProfile) {
    const auto code = small_pum();
    const auto p = row_distance_profile(code.encoder, 8);
    ASSERT_EQ(p.d_row.size(), 8u);
    EXPECT_EQ(p.at(1), 3u);
    for (std::size_t ell = 2; ell <= 8; ++ell) {
        ASSERT_TRUE(p.at(ell));
        EXPECT_GE(*p.at(ell), construction_lower_bound(ell, 3, 2));
    }
    EXPECT_EQ(p.d_free, 3u);
    EXPECT_EQ(p.status, FreeDistanceStatus::certified);
    EXPECT_EQ(p.d_free_lower_bound, 3u);
    EXPECT_FALSE(p.zero_weight_cycle);
    EXPECT_EQ(slope_estimate(p, 2, 8), Rational::of(1, 1));
    EXPECT_EQ(free_rank_distance(p).value, 3u);
    const auto ub = upper_bounds(3, 2, 1, 1);
    EXPECT_EQ(ub.d_free_bound, 3u);
    EXPECT_EQ(ub.slope_bound, 1u);
    EXPECT_TRUE(construction_bound_applies(3, 2, 1, 1));
    // The lower line alpha * l + beta stays below every computed order.
    const auto slope = slope_estimate(p, 2, 8);
    const auto beta = intercept_estimate(p, slope);
    for (std::size_t ell = 1; ell <= 8; ++ell) {
        const auto line = Rational::of(slope.num * static_cast<long long>(ell) * beta.den + beta.num * slope.den,
                                       slope.den * beta.den);
        EXPECT_LE(line, Rational::of(static_cast<long long>(*p.at(ell)), 1));
    }
}

TEST(Distance, UpperBounds) {
    EXPECT_EQ(upper_bounds(6, 4, 2, 1).d_free_bound, 5u);
    EXPECT_EQ(upper_bounds(6, 4, 2, 1).slope_bound, 2u);
    EXPECT_EQ(upper_bounds(6, 3, 3, 1).d_free_bound, 10u);
    EXPECT_THROW(upper_bounds(6, 2, 2, 1), std::invalid_argument);
    EXPECT_EQ(construction_lower_bound(1, 6, 4), 5u);
    EXPECT_EQ(construction_lower_bound(2, 6, 4), 6u);
    EXPECT_EQ(construction_lower_bound(3, 6, 4), 6u);
    EXPECT_EQ(construction_lower_bound(4, 6, 4), 9u);
    EXPECT_FALSE(construction_bound_applies(6, 3, 3, 1));
}

TEST(Distance, SearchMatchesOracles) {
    std::mt19937_64 rng(43);
    int compared = 0;
    for (int t = 0; t < 30; ++t) {
        const auto [s, n, k, k1] = testing::random_small_shape(rng);
        const auto f = ExtField::make(2, s);
        const auto enc = testing::random_encoder(f, n, k, k1, rng);
        for (Metric metric : {Metric::sum_rank, Metric::hamming}) {
            const auto p = row_distance_profile(enc, 4, metric);
            const auto full = full_state_profile(enc, 4, metric);
            for (std::size_t ell = 1; ell <= 4; ++ell) {
                EXPECT_EQ(p.at(ell), full[ell - 1]) << "t=" << t << " ell=" << ell;
                EXPECT_EQ(p.at(ell), brute_force_row_distance(enc, ell, metric)) << "t=" << t << " ell=" << ell;
                ++compared;
            }
        }
    }
    EXPECT_EQ(compared, 240);
}

TEST(Distance, EmptyOrders) {
    // G1 has full row rank, so no nonzero u has u G1 = 0.
    const auto f = ExtField::make(2, 2);
    UnitMemoryEncoder enc{MatExt::from_rows(f, {{Felt{1}, Felt{0}}}, 2), MatExt::from_rows(f, {{Felt{0}, Felt{1}}}, 2)};
    const auto p = row_distance_profile(enc, 3);
    for (std::size_t ell = 1; ell <= 3; ++ell) {
        EXPECT_FALSE(p.at(ell));
        EXPECT_FALSE(brute_force_row_distance(enc, ell));
    }
    EXPECT_FALSE(p.d_free);
    EXPECT_THROW(free_rank_distance(p), std::invalid_argument);
}

TEST(Distance, ZeroWeightCycleBlocksCertification) {
    // G0 = G1 = [1 1]: input 1,1,1,... gives c_j = 0 for j >= 1.
    const auto f = ExtField::make(2, 1);
    const MatExt g = MatExt::from_rows(f, {{Felt{1}, Felt{1}}}, 2);
    UnitMemoryEncoder enc{g, g};
    const auto p = row_distance_profile(enc, 4);
    EXPECT_TRUE(p.zero_weight_cycle);
    EXPECT_EQ(p.status, FreeDistanceStatus::lower_bound_only);
    EXPECT_FALSE(p.at(1));
}

TEST(Distance, ZeroBlockInMinimizer) {
    // G0 = I, G1 = [1 0; 0 0]: the unique order-3 minimizer repeats (1, 0),
    // whose second codeword block cancels to zero.
    const auto f = ExtField::make(2, 1);
    UnitMemoryEncoder enc{MatExt::from_rows(f, {{Felt{1}, Felt{0}}, {Felt{0}, Felt{1}}}, 2),
                          MatExt::from_rows(f, {{Felt{1}, Felt{0}}, {Felt{0}, Felt{0}}}, 2)};
    const auto p = row_distance_profile(enc, 3);
    EXPECT_EQ(p.at(1), 1u);
    EXPECT_EQ(p.at(2), 2u);
    EXPECT_EQ(p.at(3), 2u);
    EXPECT_EQ(p.zero_block_in_minimizer, (std::vector<bool>{false, false, true}));
    EXPECT_TRUE(p.zero_weight_cycle);
}

TEST(Distance, HammingDominatesRank) {
    const auto cmp = compare_hamming(small_pum().encoder, 6);
    EXPECT_TRUE(cmp.dominated);
    EXPECT_TRUE(cmp.violations.empty());
    for (std::size_t ell = 1; ell <= 6; ++ell)
        EXPECT_LE(*cmp.rank.at(ell), *cmp.hamming.at(ell));
}

TEST(Distance, ErrorsAndBudget) {
    const auto code = small_pum();
    EXPECT_THROW(row_distance_profile(code.encoder, 0), std::invalid_argument);
    EXPECT_THROW(brute_force_row_distance(code.encoder, 0), std::invalid_argument);
    EXPECT_THROW(row_distance_profile(code.encoder, 4, Metric::sum_rank, {16, 1u << 28}), BudgetExceeded);
    EXPECT_THROW(row_distance_profile(code.encoder, 4, Metric::sum_rank, {1u << 20, 1000}), BudgetExceeded);
    EXPECT_THROW(brute_force_row_distance(code.encoder, 6, Metric::sum_rank, 1000), BudgetExceeded);
    const auto p = row_distance_profile(code.encoder, 4);
    EXPECT_THROW(slope_estimate(p, 3, 3), std::invalid_argument);
    EXPECT_THROW(slope_estimate(p, 2, 5), std::invalid_argument);
}

TEST(Distance, RationalArithmetic) {
    EXPECT_EQ(Rational::of(4, -6), (Rational{-2, 3}));
    EXPECT_EQ(Rational::of(4, 2).str(), "2");
    EXPECT_EQ(Rational::of(3, 6).str(), "1/2");
    EXPECT_TRUE(Rational::of(1, 3) < Rational::of(1, 2));
    EXPECT_THROW(Rational::of(1, 0), std::invalid_argument);
}

}  // namespace
}  // namespace pumgab
