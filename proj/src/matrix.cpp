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

#include "pumgab/matrix.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <utility>

namespace pumgab {

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t q) {
    std::uint64_t result = 1, base = a % q;
    for (std::uint32_t e = q - 2; e != 0; e >>= 1) {
        if (e & 1u)
            result = result * base % q;
        base = base * base % q;
    }
    return static_cast<std::uint32_t>(result);
}

// In-place reduced row echelon form over F_q; returns pivot columns.
std::vector<std::size_t> rref_base_inplace(MatBase& m) {
    const auto q = m.q();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m.at(p, c) == 0)
            ++p;
        if (p == m.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(p, j), m.at(r, j));
        const std::uint64_t iv = inv_mod(m.at(r, c), q);
        for (std::size_t j = 0; j < m.cols(); ++j)
            m.at(r, j) = static_cast<std::uint32_t>(m.at(r, j) * iv % q);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0)
                continue;
            const std::uint64_t f = m.at(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m.at(i, j) = static_cast<std::uint32_t>((m.at(i, j) + q - f * m.at(r, j) % q) % q);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

void require_same(const MatExt& a, const MatExt& b) {
    if (!a.field_ptr() || !b.field_ptr() || !same_field(a.field(), b.field()))
        throw std::invalid_argument("matrices belong to different field contexts");
}

// In-place RREF over F_{q^s}; returns pivot columns.
std::vector<std::size_t> rref_ext_inplace(MatExt& m) {
    const auto& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m.at(p, c).is_zero())
            ++p;
        if (p == m.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(p, j), m.at(r, j));
        const Felt iv = f.inv(m.at(r, c));
        for (std::size_t j = 0; j < m.cols(); ++j)
            m.at(r, j) = f.mul(m.at(r, j), iv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero())
                continue;
            const Felt factor = m.at(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank_base(const MatBase& m) {
    MatBase work = m;
    return rref_base_inplace(work).size();
}

std::vector<std::vector<std::uint32_t>> nullspace_base(const MatBase& m) {
    MatBase work = m;
    const auto pivots = rref_base_inplace(work);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        std::vector<std::uint32_t> x(m.cols(), 0);
        x[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            x[pivots[i]] = (m.q() - work.at(i, f)) % m.q();
        basis.push_back(std::move(x));
    }
    return basis;
}

MatBase expand(const ExtField& field, std::span<const Felt> v) {
    MatBase out(field.q(), field.s(), v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (!field.contains(v[j]))
            throw std::invalid_argument("element does not belong to this field");
        for (unsigned i = 0; i < field.s(); ++i)
            out.at(i, j) = field.coeff(v[j], i);
    }
    return out;
}

MatBase expand(const ExtField& field, std::span<const Felt> v, std::span<const Felt> basis) {
    const std::size_t s = field.s();
    if (basis.size() != s)
        throw std::invalid_argument("basis must have exactly s elements");
    // Solve B * X = V with B the polynomial coordinates of the basis.
    const MatBase b = expand(field, basis);
    const MatBase vm = expand(field, v);
    MatBase aug(field.q(), s, s + v.size());
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j)
            aug.at(i, j) = b.at(i, j);
        for (std::size_t j = 0; j < v.size(); ++j)
            aug.at(i, s + j) = vm.at(i, j);
    }
    const auto pivots = rref_base_inplace(aug);
    if (pivots.size() < s || pivots[s - 1] != s - 1)
        throw std::invalid_argument("basis is linearly dependent over F_q");
    MatBase out(field.q(), s, v.size());
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            out.at(i, j) = aug.at(i, s + j);
    return out;
}

MatExt::MatExt(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}

MatExt MatExt::from_rows(FieldPtr field, const std::vector<Vec>& rows, std::size_t cols) {
    MatExt m(std::move(field), rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) {
            if (!m.field().contains(rows[r][c]))
                throw std::invalid_argument("matrix entry does not belong to the field");
            m.at(r, c) = rows[r][c];
        }
    }
    return m;
}

std::vector<Vec> MatExt::to_rows() const {
    std::vector<Vec> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out.emplace_back(row(r).begin(), row(r).end());
    return out;
}

bool MatExt::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Felt x) { return x.is_zero(); });
}

bool operator==(const MatExt& a, const MatExt& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.data_ != b.data_)
        return false;
    if (a.field_ == b.field_)
        return true;
    return a.field_ && b.field_ && same_field(*a.field_, *b.field_);
}

MatExt multiply(const MatExt& a, const MatExt& b) {
    require_same(a, b);
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product dimension mismatch");
    const auto& f = a.field();
    MatExt out(a.field_ptr(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t t = 0; t < a.cols(); ++t) {
            const Felt x = a.at(i, t);
            if (x.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.at(i, j) = f.add(out.at(i, j), f.mul(x, b.at(t, j)));
        }
    return out;
}

MatExt add(const MatExt& a, const MatExt& b) {
    require_same(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum dimension mismatch");
    MatExt out(a.field_ptr(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.at(i, j) = a.field().add(a.at(i, j), b.at(i, j));
    return out;
}

MatExt transpose(const MatExt& a) {
    MatExt out(a.field_ptr(), a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.at(j, i) = a.at(i, j);
    return out;
}

MatExt vstack(const MatExt& top, const MatExt& bottom) {
    require_same(top, bottom);
    if (top.cols() != bottom.cols())
        throw std::invalid_argument("vstack column mismatch");
    MatExt out(top.field_ptr(), top.rows() + bottom.rows(), top.cols());
    for (std::size_t i = 0; i < top.rows(); ++i)
        for (std::size_t j = 0; j < top.cols(); ++j)
            out.at(i, j) = top.at(i, j);
    for (std::size_t i = 0; i < bottom.rows(); ++i)
        for (std::size_t j = 0; j < top.cols(); ++j)
            out.at(top.rows() + i, j) = bottom.at(i, j);
    return out;
}

MatExt hstack(const MatExt& left, const MatExt& right) {
    require_same(left, right);
    if (left.rows() != right.rows())
        throw std::invalid_argument("hstack row mismatch");
    MatExt out(left.field_ptr(), left.rows(), left.cols() + right.cols());
    for (std::size_t i = 0; i < left.rows(); ++i) {
        for (std::size_t j = 0; j < left.cols(); ++j)
            out.at(i, j) = left.at(i, j);
        for (std::size_t j = 0; j < right.cols(); ++j)
            out.at(i, left.cols() + j) = right.at(i, j);
    }
    return out;
}

MatExt row_slice(const MatExt& a, std::size_t first, std::size_t count) {
    if (first + count > a.rows())
        throw std::out_of_range("row slice out of range");
    MatExt out(a.field_ptr(), count, a.cols());
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.at(i, j) = a.at(first + i, j);
    return out;
}

MatExt col_slice(const MatExt& a, std::size_t first, std::size_t count) {
    if (first + count > a.cols())
        throw std::out_of_range("column slice out of range");
    MatExt out(a.field_ptr(), a.rows(), count);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < count; ++j)
            out.at(i, j) = a.at(i, first + j);
    return out;
}

MatExt rref(const MatExt& a) {
    MatExt work = a;
    const auto rank = rref_ext_inplace(work).size();
    return row_slice(work, 0, rank);
}

std::size_t rank_ext(const MatExt& a) {
    MatExt work = a;
    return rref_ext_inplace(work).size();
}

MatExt nullspace_ext(const MatExt& a) {
    MatExt work = a;
    const auto pivots = rref_ext_inplace(work);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;
    const auto& f = a.field();
    MatExt out(a.field_ptr(), a.cols() - pivots.size(), a.cols());
    std::size_t r = 0;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free])
            continue;
        out.at(r, free) = f.one();
        for (std::size_t i = 0; i < pivots.size(); ++i)
            out.at(r, pivots[i]) = f.neg(work.at(i, free));
        ++r;
    }
    return out;
}

Vec vec_mat(const MatExt& m, std::span<const Felt> u) {
    if (u.size() != m.rows())
        throw std::invalid_argument("vector length does not match matrix rows");
    const auto& f = m.field();
    Vec out(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (u[i].is_zero())
            continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[j] = f.add(out[j], f.mul(u[i], m.at(i, j)));
    }
    return out;
}

Vec vec_add(const ExtField& field, std::span<const Felt> a, std::span<const Felt> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("vector length mismatch");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = field.add(a[i], b[i]);
    return out;
}

Vec vec_sub(const ExtField& field, std::span<const Felt> a, std::span<const Felt> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("vector length mismatch");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = field.sub(a[i], b[i]);
    return out;
}

bool vec_is_zero(std::span<const Felt> v) {
    return std::all_of(v.begin(), v.end(), [](Felt x) { return x.is_zero(); });
}

std::size_t rank_norm(const ExtField& field, std::span<const Felt> v) {
    if (field.q() == 2) {
        // Each element is a column of bits; keep an xor basis indexed by top bit.
        std::array<std::uint32_t, 32> basis{};
        std::size_t rank = 0;
        for (Felt x : v) {
            std::uint32_t w = x.value;
            while (w != 0) {
                const int top = 31 - __builtin_clz(w);
                if (basis[top] == 0) {
                    basis[top] = w;
                    ++rank;
                    break;
                }
                w ^= basis[top];
            }
        }
        return rank;
    }
    return rank_base(expand(field, v));
}

std::size_t hamming_weight(std::span<const Felt> v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Felt x) { return !x.is_zero(); }));
}

MatExt frobenius_matrix(const FieldPtr& field, std::span<const Felt> a, std::size_t m) {
    if (m == 0)
        throw std::invalid_argument("Frobenius matrix needs at least one row");
    MatExt out(field, m, a.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        Felt x = a[j];
        for (std::size_t i = 0; i < m; ++i) {
            out.at(i, j) = x;
            x = field->frobenius(x, 1);
        }
    }
    return out;
}

BlockSeq::BlockSeq(std::size_t n, std::vector<Vec> blocks) : n_(n) {
    for (auto& b : blocks)
        push_back(std::move(b));
}

void BlockSeq::push_back(Vec block) {
    if (block.size() != n_)
        throw std::invalid_argument("block length " + std::to_string(block.size()) +
                                    " differs from sequence block length " + std::to_string(n_));
    blocks_.push_back(std::move(block));
}

std::size_t sum_rank_weight(const ExtField& field, const BlockSeq& v) {
    std::size_t total = 0;
    for (const auto& b : v.blocks())
        total += rank_norm(field, b);
    return total;
}

std::size_t sum_rank_distance(const ExtField& field, const BlockSeq& a, const BlockSeq& b) {
    if (a.n() != b.n() || a.size() != b.size())
        throw std::invalid_argument("block sequences have different shapes");
    std::size_t total = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        total += rank_norm(field, vec_sub(field, a[i], b[i]));
    return total;
}

std::size_t hamming_weight(const BlockSeq& v) {
    std::size_t total = 0;
    for (const auto& b : v.blocks())
        total += hamming_weight(b);
    return total;
}

}  // namespace pumgab
