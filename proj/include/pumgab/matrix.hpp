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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pumgab/field.hpp"

namespace pumgab {

using Vec = std::vector<Felt>;

// Dense matrix over the prime field F_q.
class MatBase {
public:
    MatBase(std::uint32_t q, std::size_t rows, std::size_t cols)
        : q_(q), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::uint32_t q() const { return q_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const MatBase&, const MatBase&) = default;

private:
    std::uint32_t q_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint32_t> data_;
};

std::size_t rank_base(const MatBase& m);
// Basis of the right kernel {x : m x^T = 0}, one vector per entry.
std::vector<std::vector<std::uint32_t>> nullspace_base(const MatBase& m);

// s x n coordinate matrix of v: column j holds the coordinates of v[j].
// Without a basis the polynomial basis of the field is used. Throws
// std::invalid_argument if the given basis is not linearly independent.
MatBase expand(const ExtField& field, std::span<const Felt> v);
MatBase expand(const ExtField& field, std::span<const Felt> v, std::span<const Felt> basis);

// Dense row-major matrix over F_{q^s}. All entries belong to one field.
class MatExt {
public:
    MatExt() = default;
    MatExt(FieldPtr field, std::size_t rows, std::size_t cols);
    static MatExt from_rows(FieldPtr field, const std::vector<Vec>& rows, std::size_t cols);

    const FieldPtr& field_ptr() const { return field_; }
    const ExtField& field() const { return *field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Felt& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Felt at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const Felt> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Felt> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::vector<Vec> to_rows() const;

    bool is_zero() const;

    friend bool operator==(const MatExt& a, const MatExt& b);

private:
    FieldPtr field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Felt> data_;
};

MatExt multiply(const MatExt& a, const MatExt& b);
MatExt add(const MatExt& a, const MatExt& b);
MatExt transpose(const MatExt& a);
MatExt vstack(const MatExt& top, const MatExt& bottom);
MatExt hstack(const MatExt& left, const MatExt& right);
MatExt row_slice(const MatExt& a, std::size_t first, std::size_t count);
MatExt col_slice(const MatExt& a, std::size_t first, std::size_t count);

// Reduced row echelon form (nonzero rows only). Pivot search takes the first
// nonzero entry in column order and swaps rows only.
MatExt rref(const MatExt& a);
std::size_t rank_ext(const MatExt& a);
// Rows form a basis of {x : a x^T = 0}; an empty basis has zero rows.
MatExt nullspace_ext(const MatExt& a);

// u * m for a row vector u of length m.rows().
Vec vec_mat(const MatExt& m, std::span<const Felt> u);
Vec vec_add(const ExtField& field, std::span<const Felt> a, std::span<const Felt> b);
Vec vec_sub(const ExtField& field, std::span<const Felt> a, std::span<const Felt> b);
bool vec_is_zero(std::span<const Felt> v);

// Rank over F_q of the coordinate expansion of v.
std::size_t rank_norm(const ExtField& field, std::span<const Felt> v);
std::size_t hamming_weight(std::span<const Felt> v);

// m x n matrix whose row i is (a_1^[i], ..., a_n^[i]).
MatExt frobenius_matrix(const FieldPtr& field, std::span<const Felt> a, std::size_t m);

// A finite sequence of length-n blocks over F_{q^s}; positions past the end
// are zero.
class BlockSeq {
public:
    explicit BlockSeq(std::size_t n) : n_(n) {}
    BlockSeq(std::size_t n, std::vector<Vec> blocks);

    std::size_t n() const { return n_; }
    std::size_t size() const { return blocks_.size(); }
    const std::vector<Vec>& blocks() const { return blocks_; }
    const Vec& operator[](std::size_t i) const { return blocks_[i]; }
    void push_back(Vec block);

    friend bool operator==(const BlockSeq&, const BlockSeq&) = default;

private:
    std::size_t n_;
    std::vector<Vec> blocks_;
};

// Visits u * m for every u in F^(m.rows()) in odometer order: the index of u
// is sum(u_i.value * Q^i) with Q = q^s, so u_0 varies fastest. The callback
// receives (index, u, u * m).
template <typename Fn>
void for_each_combination(const MatExt& m, Fn&& fn) {
    const auto& f = m.field();
    const std::size_t k = m.rows();
    const std::uint64_t order = f.order();
    Vec u(k);
    Vec cur(m.cols());
    std::uint64_t index = 0;
    while (true) {
        fn(index, static_cast<const Vec&>(u), static_cast<const Vec&>(cur));
        std::size_t i = 0;
        for (; i < k; ++i) {
            const Felt before = u[i];
            const Felt after{before.value + 1 == order ? 0u : before.value + 1};
            u[i] = after;
            const Felt delta = f.sub(after, before);
            for (std::size_t j = 0; j < m.cols(); ++j)
                cur[j] = f.add(cur[j], f.mul(delta, m.at(i, j)));
            if (!after.is_zero())
                break;
        }
        if (i == k)
            return;
        ++index;
    }
}

std::size_t sum_rank_weight(const ExtField& field, const BlockSeq& v);
// Throws std::invalid_argument on shape mismatch.
std::size_t sum_rank_distance(const ExtField& field, const BlockSeq& a, const BlockSeq& b);
std::size_t hamming_weight(const BlockSeq& v);

}  // namespace pumgab
