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

#include "pumgab/pum.hpp"

#include <algorithm>
#include <sstream>

namespace pumgab {

namespace {

std::string dims(std::size_t r, std::size_t c) {
    return std::to_string(r) + "x" + std::to_string(c);
}

bool is_frobenius_matrix(const MatExt& m) {
    const auto& f = m.field();
    for (std::size_t i = 1; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != f.frobenius(m.at(i - 1, j), 1))
                return false;
    return true;
}

// Frobenius structure plus full rank norm of the first row.
ChainCheck check_gabidulin_matrix(std::string name, const MatExt& m) {
    ChainCheck check{std::move(name), false, {}, {}};
    if (m.rows() == 0) {
        check.detail = "empty matrix";
        return check;
    }
    if (!is_frobenius_matrix(m)) {
        check.detail = "rows are not successive Frobenius powers of the first row";
        return check;
    }
    const auto first = m.row(0);
    const auto rank = rank_norm(m.field(), first);
    if (rank != m.cols()) {
        check.detail = "defining vector has rank norm " + std::to_string(rank) + " < " +
                       std::to_string(m.cols()) + " (elements dependent over F_q)";
        const auto kernel = nullspace_base(expand(m.field(), first));
        if (!kernel.empty())
            check.dependency = kernel.front();
        return check;
    }
    check.pass = true;
    check.detail = "Frobenius matrix " + dims(m.rows(), m.cols()) + " on independent elements";
    return check;
}

ChainCheck zero_check(std::string name, const MatExt& m) {
    ChainCheck check{std::move(name), m.is_zero(), {}, {}};
    check.detail = check.pass ? "zero" : "nonzero entries";
    return check;
}

using Poly = std::vector<Felt>;

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
}

Poly poly_mul(const ExtField& f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty())
        return {};
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    trim(out);
    return out;
}

Poly poly_add(const ExtField& f, const Poly& a, const Poly& b, bool subtract) {
    Poly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        const Felt x = i < a.size() ? a[i] : Felt{};
        const Felt y = i < b.size() ? b[i] : Felt{};
        out[i] = subtract ? f.sub(x, y) : f.add(x, y);
    }
    trim(out);
    return out;
}

// Laplace expansion along the first row.
Poly poly_det(const ExtField& f, const std::vector<std::vector<Poly>>& m) {
    const std::size_t size = m.size();
    if (size == 1)
        return m[0][0];
    Poly det;
    for (std::size_t c = 0; c < size; ++c) {
        if (m[0][c].empty())
            continue;
        std::vector<std::vector<Poly>> minor(size - 1);
        for (std::size_t r = 1; r < size; ++r)
            for (std::size_t j = 0; j < size; ++j)
                if (j != c)
                    minor[r - 1].push_back(m[r][j]);
        const Poly term = poly_mul(f, m[0][c], poly_det(f, minor));
        det = poly_add(f, det, term, c % 2 == 1);
    }
    return det;
}

}  // namespace

std::size_t min_field_size(std::size_t n, std::size_t k, std::size_t mH) {
    if (k >= n)
        throw std::invalid_argument("min_field_size requires k < n");
    const std::size_t r = n - k;
    return (mH + 1) * ((n + r - 1) / r) * r;
}

std::string to_string(CodeClass kind) {
    switch (kind) {
    case CodeClass::unit_memory:
        return "UM";
    case CodeClass::partial_unit_memory:
        return "PUM";
    case CodeClass::invalid:
        break;
    }
    return "invalid";
}

RateCheck rate_check(std::size_t n, std::size_t k, std::size_t k1, std::size_t mH) {
    std::ostringstream why;
    if (k == 0 || k >= n) {
        why << "dimension must satisfy 0 < k < n (n=" << n << ", k=" << k << ")";
        return {CodeClass::invalid, why.str()};
    }
    if (mH == 0) {
        why << "dual memory mH must be at least 1";
        return {CodeClass::invalid, why.str()};
    }
    if (k1 == 0 || k1 > k) {
        why << "k1 must satisfy 0 < k1 <= k (k1=" << k1 << ", k=" << k << ")";
        return {CodeClass::invalid, why.str()};
    }
    const std::size_t nu = mH * (n - k);
    if (k == nu) {
        if (k1 != k) {
            why << "UM rate restriction: k = mH(n-k) = " << nu << " requires overall constraint length k1 = k";
            return {CodeClass::invalid, why.str()};
        }
        why << "UM: k = mH(n-k) = " << nu << ", R = " << k << "/" << n;
        return {CodeClass::unit_memory, why.str()};
    }
    if (nu > k) {
        why << "PUM rate restriction violated: R = " << k << "/" << n << " <= mH/(mH+1) = " << mH << "/" << mH + 1
            << ", and UM rate restriction k = mH(n-k) fails (" << k << " != " << nu << ")";
        return {CodeClass::invalid, why.str()};
    }
    if (k1 != nu) {
        why << "PUM rate restriction: overall constraint length k1 must equal mH(n-k) = " << nu << " (got " << k1
            << ")";
        return {CodeClass::invalid, why.str()};
    }
    why << "PUM: k1 = mH(n-k) = " << nu << " < k = " << k << ", R = " << k << "/" << n << " > " << mH << "/"
        << mH + 1;
    return {CodeClass::partial_unit_memory, why.str()};
}

std::vector<std::size_t> h0_exponents(std::size_t n, std::size_t k, std::size_t mH) {
    const std::size_t r = n - k;
    std::vector<std::size_t> out;
    for (std::size_t start = 0; out.size() < n; start += (mH + 1) * r)
        for (std::size_t t = 0; t < r && out.size() < n; ++t)
            out.push_back(start + t);
    return out;
}

Vec build_h0(const ExtField& field, const NormalElement& b, std::size_t n, std::size_t k, std::size_t mH,
             bool allow_small_field) {
    const auto needed = min_field_size(n, k, mH);
    if (field.s() < needed && !allow_small_field)
        throw std::invalid_argument("field-size constraint violated: s = " + std::to_string(field.s()) +
                                    " < (mH+1)*ceil(n/(n-k))*(n-k) = " + std::to_string(needed));
    Vec h0;
    for (auto e : h0_exponents(n, k, mH))
        h0.push_back(field.frobenius(b.b, static_cast<std::int64_t>(e)));
    return h0;
}

ParityChain build_parity_chain(const PumParams& params, const NormalElement& b, bool allow_small_field) {
    const std::size_t r = params.n - params.k;
    ParityChain chain;
    chain.field = params.field;
    chain.n = params.n;
    chain.k = params.k;
    chain.mH = params.mH;
    chain.h0 = build_h0(*params.field, b, params.n, params.k, params.mH, allow_small_field);
    const MatExt stack = frobenius_matrix(params.field, chain.h0, (params.mH + 1) * r);
    for (std::size_t i = 0; i <= params.mH; ++i)
        chain.blocks.push_back(row_slice(stack, i * r, r));
    return chain;
}

bool ChainReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const ChainCheck& c) { return c.pass; });
}

ChainReport verify_gabidulin_chain(const ParityChain& chain) {
    ChainReport report;
    const std::size_t r = chain.n - chain.k;
    report.column_n = chain.n;
    report.column_k = static_cast<long>(chain.n) - static_cast<long>((chain.mH + 1) * r);
    for (std::size_t i = 1; i <= chain.mH; ++i)
        report.row_codes.emplace_back((i + 1) * chain.n, i * chain.n + chain.k);

    if (chain.blocks.size() != chain.mH + 1) {
        report.checks.push_back({"shape", false, "expected " + std::to_string(chain.mH + 1) + " blocks", {}});
        return report;
    }
    for (const auto& h : chain.blocks)
        if (h.rows() != r || h.cols() != chain.n) {
            report.checks.push_back({"shape", false, "block is " + dims(h.rows(), h.cols()) + ", expected " +
                                                         dims(r, chain.n), {}});
            return report;
        }

    for (std::size_t i = 0; i <= chain.mH; ++i)
        report.checks.push_back(check_gabidulin_matrix("H_" + std::to_string(i), chain.blocks[i]));

    MatExt column = chain.blocks[0];
    for (std::size_t i = 1; i <= chain.mH; ++i)
        column = vstack(column, chain.blocks[i]);
    auto col_check = check_gabidulin_matrix("column stack", column);
    if (col_check.pass && (chain.h0.size() != chain.n || !std::equal(chain.h0.begin(), chain.h0.end(),
                                                                     column.row(0).begin()))) {
        col_check.pass = false;
        col_check.detail = "first row of the column stack differs from h0";
    }
    report.checks.push_back(std::move(col_check));

    for (std::size_t i = 1; i <= chain.mH; ++i) {
        MatExt row = chain.blocks[i];
        for (std::size_t j = i; j-- > 0;)
            row = hstack(row, chain.blocks[j]);
        report.checks.push_back(check_gabidulin_matrix("row stack " + std::to_string(i), row));
    }
    return report;
}

UnitMemoryEncoder solve_generator(std::span<const MatExt> blocks,
                                  std::size_t k,
                                  std::size_t k1,
                                  const SolveOptions& options) {
    if (blocks.empty())
        throw std::invalid_argument("parity chain is empty");
    const std::size_t mH = blocks.size() - 1;
    const std::size_t r = blocks[0].rows();
    const std::size_t n = blocks[0].cols();
    for (const auto& h : blocks)
        if (h.rows() != r || h.cols() != n)
            throw std::invalid_argument("parity-check blocks differ in shape");
    if (r + k != n)
        throw std::invalid_argument("parity-check blocks have " + std::to_string(r) + " rows, expected n-k = " +
                                    std::to_string(n - k));
    if (k1 == 0 || k1 > k)
        throw std::invalid_argument("k1 must satisfy 0 < k1 <= k");
    if (k * (mH + 1) < mH * n)
        throw std::invalid_argument("generator existence requires R = k/n >= mH/(mH+1)");
    if (options.require_existence_condition && 2 * k1 < k)
        throw std::invalid_argument("generator existence condition violated: k1 = " + std::to_string(k1) +
                                    " < ceil(k/2) = " + std::to_string((k + 1) / 2));

    const auto& field_ptr = blocks[0].field_ptr();
    // Every generator row pair (x, y) = (row of G0, row of G1) satisfies the
    // same homogeneous system, so the joint system is block diagonal and one
    // kernel serves all rows. Unknowns are ordered (y, x).
    MatExt system(field_ptr, (mH + 2) * r, 2 * n);
    auto place = [&](std::size_t row0, std::size_t col0, const MatExt& h) {
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < n; ++j)
                system.at(row0 + i, col0 + j) = h.at(i, j);
    };
    place(0, n, blocks[0]);
    for (std::size_t i = 1; i <= mH; ++i) {
        place(i * r, n, blocks[i]);
        place(i * r, 0, blocks[i - 1]);
    }
    place((mH + 1) * r, 0, blocks[mH]);

    const MatExt kernel = rref(nullspace_ext(system));

    std::vector<Vec> with_memory;  // (y, x) with y != 0, distinct y-pivots
    std::vector<Vec> memoryless;   // x with (0, x) in the kernel
    for (std::size_t i = 0; i < kernel.rows(); ++i) {
        const auto row = kernel.row(i);
        const bool y_zero = vec_is_zero(row.subspan(0, n));
        if (y_zero)
            memoryless.emplace_back(row.begin() + static_cast<long>(n), row.end());
        else
            with_memory.emplace_back(row.begin(), row.end());
    }
    if (memoryless.size() < k - k1 || with_memory.size() < k1)
        throw ConstructionError("generator kernel of dimension " + std::to_string(kernel.rows()) +
                                " admits no (" + std::to_string(k) + ", " + std::to_string(k1) + ") pair");

    std::vector<Vec> g0_rows(memoryless.begin(), memoryless.begin() + static_cast<long>(k - k1));
    std::vector<Vec> top_x;
    std::vector<Vec> top_y;
    auto current_rank = [&](const std::vector<Vec>& extra) {
        std::vector<Vec> all = g0_rows;
        all.insert(all.end(), top_x.begin(), top_x.end());
        all.insert(all.end(), extra.begin(), extra.end());
        return rank_ext(MatExt::from_rows(field_ptr, all, n));
    };
    std::size_t rank = current_rank({});
    for (const auto& cand : with_memory) {
        if (top_x.size() == k1)
            break;
        Vec x(cand.begin() + static_cast<long>(n), cand.end());
        if (current_rank({x}) > rank) {
            top_x.push_back(std::move(x));
            top_y.emplace_back(cand.begin(), cand.begin() + static_cast<long>(n));
            ++rank;
        }
    }
    if (top_x.size() < k1 || rank != k)
        throw ConstructionError("no full-rank generator selection in kernel of dimension " +
                                std::to_string(kernel.rows()) + " (reached rank(G0) = " + std::to_string(rank) + ")");

    std::vector<Vec> g0 = top_x;
    g0.insert(g0.end(), g0_rows.begin(), g0_rows.end());
    std::vector<Vec> g1 = top_y;
    g1.resize(k, Vec(n));
    return {MatExt::from_rows(field_ptr, g0, n), MatExt::from_rows(field_ptr, g1, n)};
}

PumCode build_code(const PumParams& params, const BuildOptions& options) {
    if (!params.field)
        throw std::invalid_argument("code parameters carry no field");
    const auto rc = rate_check(params.n, params.k, params.k1, params.mH);
    if (!rc.ok())
        throw std::invalid_argument(rc.explanation);
    const auto nb = find_normal_element(*params.field);

    PumCode code;
    code.params = params;
    code.normal_element = nb.b;
    code.chain = build_parity_chain(params, nb, options.allow_small_field);

    const auto chain_report = verify_gabidulin_chain(code.chain);
    for (const auto& c : chain_report.checks)
        if (!c.pass)
            throw ConstructionError("parity chain check '" + c.name + "' failed: " + c.detail);

    SolveOptions solve;
    solve.require_existence_condition = options.require_existence_condition;
    code.encoder = solve_generator(code.chain.blocks, params.k, params.k1, solve);

    const auto gen_report = verify_generator(code);
    for (const auto& c : gen_report.checks)
        if (!c.pass)
            throw ConstructionError("generator check '" + c.name + "' failed: " + c.detail);
    const auto mb = check_minimal_basic(code.chain.blocks);
    if (!mb.pass)
        throw ConstructionError("minimal basic check failed: max subdeterminant degree " +
                                std::to_string(mb.max_degree) + " != " + std::to_string(mb.constraint));
    return code;
}

bool GeneratorReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const ChainCheck& c) { return c.pass; });
}

GeneratorReport verify_generator(const PumCode& code) {
    GeneratorReport report;
    const auto& p = code.params;
    const auto& g0 = code.encoder.g0;
    const auto& g1 = code.encoder.g1;
    const auto& blocks = code.chain.blocks;
    const std::size_t r = p.n - p.k;

    bool shapes = g0.rows() == p.k && g0.cols() == p.n && g1.rows() == p.k && g1.cols() == p.n &&
                  blocks.size() == p.mH + 1;
    for (const auto& h : blocks)
        shapes = shapes && h.rows() == r && h.cols() == p.n;
    if (!shapes) {
        report.checks.push_back({"orthogonality", false,
                                 "shape mismatch: G0 " + dims(g0.rows(), g0.cols()) + ", G1 " +
                                     dims(g1.rows(), g1.cols()) + ", expected " + dims(p.k, p.n) + " each",
                                 {}});
        return report;
    }

    report.checks.push_back(zero_check("G0 H_0^T", multiply(g0, transpose(blocks[0]))));
    for (std::size_t i = 1; i <= p.mH; ++i)
        report.checks.push_back(zero_check("G0 H_" + std::to_string(i) + "^T + G1 H_" + std::to_string(i - 1) + "^T",
                                           add(multiply(g0, transpose(blocks[i])),
                                               multiply(g1, transpose(blocks[i - 1])))));
    report.checks.push_back(zero_check("G1 H_" + std::to_string(p.mH) + "^T", multiply(g1, transpose(blocks[p.mH]))));

    const auto r0 = rank_ext(g0);
    report.checks.push_back({"rank(G0) = k", r0 == p.k, "rank " + std::to_string(r0), {}});
    const auto r1 = rank_ext(g1);
    report.checks.push_back({"rank(G1) = k1", r1 == p.k1, "rank " + std::to_string(r1), {}});
    report.checks.push_back(zero_check("G1 tail rows", row_slice(g1, p.k1, p.k - p.k1)));
    return report;
}

CodewordSeq encode_sequence(const UnitMemoryEncoder& encoder, const BlockSeq& info) {
    const std::size_t k = encoder.g0.rows();
    const std::size_t n = encoder.g0.cols();
    if (info.n() != k)
        throw std::invalid_argument("information blocks have length " + std::to_string(info.n()) + ", expected k = " +
                                    std::to_string(k));
    const auto& f = encoder.g0.field();
    CodewordSeq out{info, BlockSeq(n)};
    Vec prev(k);
    for (std::size_t j = 0; j <= info.size(); ++j) {
        const Vec cur = j < info.size() ? info[j] : Vec(k);
        out.code.push_back(vec_add(f, vec_mat(encoder.g0, cur), vec_mat(encoder.g1, prev)));
        prev = cur;
    }
    return out;
}

bool syndrome_sequence(std::span<const MatExt> blocks, const BlockSeq& code) {
    if (blocks.empty())
        throw std::invalid_argument("parity chain is empty");
    const std::size_t r = blocks[0].rows();
    const std::size_t n = blocks[0].cols();
    if (code.n() != n)
        throw std::invalid_argument("codeword blocks have length " + std::to_string(code.n()) + ", expected " +
                                    std::to_string(n));
    const auto& f = blocks[0].field();
    const std::size_t mH = blocks.size() - 1;
    for (std::size_t j = 0; j < code.size() + mH; ++j) {
        Vec syn(r);
        for (std::size_t i = 0; i <= mH; ++i) {
            if (i > j || j - i >= code.size())
                continue;
            const auto& c = code[j - i];
            for (std::size_t row = 0; row < r; ++row)
                for (std::size_t col = 0; col < n; ++col)
                    syn[row] = f.add(syn[row], f.mul(blocks[i].at(row, col), c[col]));
        }
        if (!vec_is_zero(syn))
            return false;
    }
    return true;
}

MinimalBasicReport check_minimal_basic(std::span<const MatExt> blocks) {
    if (blocks.empty())
        throw std::invalid_argument("parity chain is empty");
    const std::size_t r = blocks[0].rows();
    const std::size_t n = blocks[0].cols();
    if (r == 0 || r > 8)
        throw std::invalid_argument("subdeterminant size must be in [1, 8]");
    const auto& f = blocks[0].field();
    const std::size_t mH = blocks.size() - 1;

    MinimalBasicReport report;
    report.constraint = mH * r;
    for (std::size_t start = 0; start + r <= n; ++start) {
        std::vector<std::vector<Poly>> m(r, std::vector<Poly>(r));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                Poly p(mH + 1);
                for (std::size_t t = 0; t <= mH; ++t)
                    p[t] = blocks[t].at(i, start + j);
                trim(p);
                m[i][j] = std::move(p);
            }
        const Poly det = poly_det(f, m);
        const long degree = static_cast<long>(det.size()) - 1;
        report.window_degrees.push_back(degree);
        report.max_degree = std::max(report.max_degree, degree);
    }
    report.pass = report.max_degree == static_cast<long>(report.constraint);
    return report;
}

}  // namespace pumgab
