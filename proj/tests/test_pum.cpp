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
#include <string>
#include <vector>

#include "pumgab/pum.hpp"
#include "testutil.hpp"

namespace pumgab {
namespace {

// Frobenius exponent of each entry of v relative to b, or -1.
std::vector<long> exponents_of(const ExtField& f, Felt b, std::span<const Felt> v) {
    std::vector<long> out;
    for (Felt x : v) {
        long e = -1;
        for (unsigned i = 0; i < f.s(); ++i)
            if (f.frobenius(b, i) == x) {
                e = static_cast<long>(i);
                break;
            }
        out.push_back(e);
    }
    return out;
}

PumCode make(std::uint32_t q, unsigned s, std::size_t n, std::size_t k, std::size_t k1, std::size_t mH,
             BuildOptions opts = {}) {
    return build_code({ExtField::make(q, s), n, k, k1, mH}, opts);
}

TEST(Pum, MinFieldSize) {
    EXPECT_EQ(min_field_size(6, 4, 1), 12u);
    EXPECT_EQ(min_field_size(3, 2, 1), 6u);
    EXPECT_EQ(min_field_size(4, 2, 1), 8u);
    EXPECT_THROW(min_field_size(3, 3, 1), std::invalid_argument);
}

TEST(Pum, RateCheck) {
    EXPECT_EQ(rate_check(6, 3, 3, 1).kind, CodeClass::unit_memory);
    EXPECT_EQ(rate_check(6, 4, 2, 1).kind, CodeClass::partial_unit_memory);
    EXPECT_EQ(rate_check(3, 2, 1, 1).kind, CodeClass::partial_unit_memory);
    const auto bad = rate_check(6, 2, 2, 1);
    EXPECT_EQ(bad.kind, CodeClass::invalid);
    EXPECT_NE(bad.explanation.find("PUM rate restriction"), std::string::npos);
    EXPECT_NE(bad.explanation.find("UM rate restriction"), std::string::npos);
    EXPECT_EQ(rate_check(6, 4, 1, 1).kind, CodeClass::invalid);
    EXPECT_EQ(rate_check(6, 3, 2, 1).kind, CodeClass::invalid);
    EXPECT_EQ(rate_check(6, 6, 2, 1).kind, CodeClass::invalid);
    EXPECT_EQ(rate_check(6, 4, 2, 0).kind, CodeClass::invalid);
    EXPECT_EQ(rate_check(9, 6, 6, 2).kind, CodeClass::unit_memory);
    EXPECT_EQ(rate_check(9, 6, 3, 2).kind, CodeClass::invalid);
    EXPECT_EQ(rate_check(4, 3, 2, 2).kind, CodeClass::partial_unit_memory);
}

TEST(Pum, H0Exponents) {
    EXPECT_EQ(h0_exponents(6, 4, 1), (std::vector<std::size_t>{0, 1, 4, 5, 8, 9}));
    EXPECT_EQ(h0_exponents(3, 2, 1), (std::vector<std::size_t>{0, 2, 4}));
    EXPECT_EQ(h0_exponents(5, 3, 1), (std::vector<std::size_t>{0, 1, 4, 5, 8}));
    EXPECT_EQ(h0_exponents(4, 3, 2), (std::vector<std::size_t>{0, 3, 6, 9}));
}

TEST(Pum, ExampleChainExponents) {
    const auto code = make(2, 12, 6, 4, 2, 1);
    const auto& f = *code.params.field;
    const auto& h = code.chain.blocks;
    ASSERT_EQ(h.size(), 2u);
    EXPECT_EQ(exponents_of(f, code.normal_element, h[0].row(0)), (std::vector<long>{0, 1, 4, 5, 8, 9}));
    EXPECT_EQ(exponents_of(f, code.normal_element, h[1].row(0)), (std::vector<long>{2, 3, 6, 7, 10, 11}));
    EXPECT_TRUE(verify_gabidulin_chain(code.chain).all_pass());
    EXPECT_TRUE(verify_generator(code).all_pass());
}

TEST(Pum, SmallCodeChain) {
    const auto code = make(2, 6, 3, 2, 1, 1);
    const auto& f = *code.params.field;
    EXPECT_EQ(exponents_of(f, code.normal_element, code.chain.blocks[1].row(0)), (std::vector<long>{1, 3, 5}));
    const auto report = verify_gabidulin_chain(code.chain);
    EXPECT_TRUE(report.all_pass());
    EXPECT_EQ(report.column_k, 1);
    ASSERT_EQ(report.row_codes.size(), 1u);
    EXPECT_EQ(report.row_codes[0], (std::pair<std::size_t, std::size_t>{6, 5}));
    // Bottom row of G1 is zero.
    EXPECT_TRUE(vec_is_zero(code.encoder.g1.row(1)));
    EXPECT_EQ(rank_ext(code.encoder.g1), 1u);
}

// Row block i of the stacked Frobenius matrix is the Frobenius matrix of h0
// raised to the [i(n-k)] power.
TEST(Pum, SlicingConsistency) {
    const auto code = make(2, 12, 6, 4, 2, 1);
    const auto& f = code.params.field;
    for (std::size_t i = 0; i < code.chain.blocks.size(); ++i) {
        Vec hi;
        for (Felt x : code.chain.h0)
            hi.push_back(f->frobenius(x, static_cast<std::int64_t>(i * 2)));
        EXPECT_EQ(code.chain.blocks[i], frobenius_matrix(f, hi, 2));
    }
}

TEST(Pum, SmallFieldOverrideFailsWithDependency) {
    const PumParams p{ExtField::make(2, 5), 3, 2, 1, 1};
    const auto nb = find_normal_element(*p.field);
    EXPECT_THROW(build_parity_chain(p, nb), std::invalid_argument);
    const auto chain = build_parity_chain(p, nb, true);
    const auto report = verify_gabidulin_chain(chain);
    EXPECT_FALSE(report.all_pass());
    bool found = false;
    for (const auto& c : report.checks)
        if (!c.pass && !c.dependency.empty()) {
            ASSERT_EQ(c.name, "row stack 1");
            // The witness is a nonzero F_q combination of (h1, h0) that vanishes.
            const MatExt row = hstack(chain.blocks[1], chain.blocks[0]);
            ASSERT_EQ(c.dependency.size(), row.cols());
            Felt sum = p.field->zero();
            bool nonzero = false;
            for (std::size_t j = 0; j < row.cols(); ++j) {
                sum = p.field->add(sum, p.field->scale(c.dependency[j], row.at(0, j)));
                nonzero = nonzero || c.dependency[j] != 0;
            }
            EXPECT_TRUE(nonzero);
            EXPECT_TRUE(sum.is_zero());
            found = true;
        }
    EXPECT_TRUE(found);
    BuildOptions opts;
    opts.allow_small_field = true;
    EXPECT_THROW(build_code(p, opts), ConstructionError);
}

// Every admissible parameter set with q = 2, s <= 12, n <= 6.
TEST(Pum, ChainChecksPassExhaustively) {
    std::size_t checked = 0;
    for (std::size_t n = 2; n <= 6; ++n)
        for (std::size_t k = 1; k < n; ++k)
            for (std::size_t mH = 1; mH <= 5; ++mH) {
                const std::size_t nu = mH * (n - k);
                if (nu > k)
                    continue;
                const std::size_t need = min_field_size(n, k, mH);
                for (std::size_t s = need; s <= 12; ++s) {
                    const PumParams p{ExtField::make(2, static_cast<unsigned>(s)), n, k, nu, mH};
                    ASSERT_TRUE(rate_check(n, k, nu, mH).ok());
                    const auto chain = build_parity_chain(p, find_normal_element(*p.field));
                    const auto report = verify_gabidulin_chain(chain);
                    for (const auto& c : report.checks)
                        EXPECT_TRUE(c.pass) << "n=" << n << " k=" << k << " mH=" << mH << " s=" << s << " "
                                            << c.name << ": " << c.detail;
                    ++checked;
                }
            }
    EXPECT_GT(checked, 20u);
}

TEST(Pum, BuiltCodesSatisfyAllRelations) {
    struct Case {
        unsigned s;
        std::size_t n, k, k1, mH;
        bool relax;
    };
    for (const auto& c : std::vector<Case>{{6, 3, 2, 1, 1, false},
                                           {7, 3, 2, 1, 1, false},
                                           {12, 6, 4, 2, 1, false},
                                           {8, 4, 2, 2, 1, false},
                                           {12, 6, 3, 3, 1, false},
                                           {9, 3, 2, 2, 2, false},
                                           {8, 4, 3, 1, 1, true},
                                           {12, 4, 3, 2, 2, false},
                                           {12, 5, 3, 2, 1, false}}) {
        BuildOptions opts;
        opts.require_existence_condition = !c.relax;
        const auto code = make(2, c.s, c.n, c.k, c.k1, c.mH, opts);
        const auto report = verify_generator(code);
        for (const auto& chk : report.checks)
            EXPECT_TRUE(chk.pass) << chk.name << ": " << chk.detail;
        const auto mb = check_minimal_basic(code.chain.blocks);
        EXPECT_TRUE(mb.pass);
        EXPECT_EQ(mb.max_degree, static_cast<long>(c.mH * (c.n - c.k)));
    }
}

TEST(Pum, OddCharacteristicConstruction) {
    const auto code = make(3, 6, 3, 2, 1, 1);
    EXPECT_TRUE(verify_generator(code).all_pass());
    EXPECT_TRUE(check_minimal_basic(code.chain.blocks).pass);
}

TEST(Pum, ExistenceConditionIsEnforced) {
    const auto code = make(2, 8, 4, 3, 1, 1, {false, false});
    try {
        solve_generator(code.chain.blocks, 3, 1);
        FAIL() << "expected precondition error";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("generator existence condition"), std::string::npos);
    }
    EXPECT_THROW(make(2, 8, 4, 3, 1, 1), std::invalid_argument);
    EXPECT_THROW(solve_generator(code.chain.blocks, 3, 0), std::invalid_argument);
    EXPECT_THROW(solve_generator(code.chain.blocks, 2, 1), std::invalid_argument);
}

TEST(Pum, EncodeAndSyndrome) {
    std::mt19937_64 rng(41);
    for (const auto& code : {make(2, 6, 3, 2, 1, 1), make(2, 12, 6, 4, 2, 1), make(2, 9, 3, 2, 2, 2)}) {
        const auto& f = *code.params.field;
        for (int t = 0; t < 20; ++t) {
            const std::size_t len = 1 + rng() % 6;
            const BlockSeq info = testing::random_blocks(f, code.params.k, len, rng);
            const auto seq = encode_sequence(code.encoder, info);
            ASSERT_EQ(seq.code.size(), len + 1);
            ASSERT_TRUE(syndrome_sequence(code.chain.blocks, seq.code));
            std::vector<Vec> blocks = seq.code.blocks();
            const std::size_t j = rng() % blocks.size();
            const std::size_t pos = rng() % code.params.n;
            blocks[j][pos] = f.add(blocks[j][pos], Felt{static_cast<std::uint32_t>(1 + rng() % (f.order() - 1))});
            ASSERT_FALSE(syndrome_sequence(code.chain.blocks, BlockSeq(code.params.n, blocks)));
        }
        EXPECT_THROW(encode_sequence(code.encoder, BlockSeq(code.params.k + 1)), std::invalid_argument);
    }
}

TEST(Pum, MinimalBasicDetectsRankDeficientLastBlock) {
    const auto code = make(2, 12, 6, 4, 2, 1);
    auto blocks = code.chain.blocks;
    // Make H_1 rank deficient by copying its first row into the second.
    for (std::size_t c = 0; c < blocks[1].cols(); ++c)
        blocks[1].at(1, c) = blocks[1].at(0, c);
    const auto mb = check_minimal_basic(blocks);
    EXPECT_FALSE(mb.pass);
    EXPECT_LT(mb.max_degree, 2);
    EXPECT_EQ(mb.constraint, 2u);

    const auto good = check_minimal_basic(code.chain.blocks);
    EXPECT_TRUE(good.pass);
    EXPECT_EQ(good.max_degree, 2);
    const auto small = check_minimal_basic(make(2, 6, 3, 2, 1, 1).chain.blocks);
    EXPECT_TRUE(small.pass);
    EXPECT_EQ(small.max_degree, 1);
}

}  // namespace
}  // namespace pumgab
