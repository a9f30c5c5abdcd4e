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

#include "pumgab/gabidulin.hpp"

#include <limits>
#include <string>

namespace pumgab {

GabidulinCode::GabidulinCode(FieldPtr field, Vec h, std::size_t k)
    : field_(std::move(field)), h_(std::move(h)), k_(k) {
    const std::size_t n = h_.size();
    if (n > field_->s())
        throw std::invalid_argument("code length " + std::to_string(n) +
                                    " exceeds extension degree " + std::to_string(field_->s()));
    if (k_ == 0 || k_ >= n)
        throw std::invalid_argument("dimension must satisfy 0 < k < n");
    if (rank_norm(*field_, h_) != n)
        throw std::invalid_argument("defining vector h is linearly dependent over F_q");
    parity_check_ = frobenius_matrix(field_, h_, n - k_);
    generator_ = rref(nullspace_ext(parity_check_));
    if (generator_.rows() != k_)
        throw std::logic_error("parity-check matrix of a Gabidulin code lost rank");
}

Vec GabidulinCode::encode(std::span<const Felt> u) const {
    if (u.size() != k_)
        throw std::invalid_argument("information vector length differs from k");
    return vec_mat(generator_, u);
}

bool GabidulinCode::is_codeword(std::span<const Felt> c) const {
    if (c.size() != n())
        return false;
    MatExt col(field_, n(), 1);
    for (std::size_t i = 0; i < n(); ++i)
        col.at(i, 0) = c[i];
    return multiply(parity_check_, col).is_zero();
}

MinDistanceResult min_rank_distance_bruteforce(const MatExt& generator, std::uint64_t limit) {
    const auto& f = generator.field();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < generator.rows(); ++i) {
        if (count > limit / f.order())
            throw BudgetExceeded("codeword enumeration exceeds limit of " + std::to_string(limit));
        count *= f.order();
    }
    MinDistanceResult best{std::numeric_limits<std::size_t>::max(), {}};
    for_each_combination(generator, [&](std::uint64_t, const Vec& u, const Vec& c) {
        if (vec_is_zero(u))
            return;
        const auto w = rank_norm(f, c);
        if (w < best.distance) {
            best.distance = w;
            best.witness = c;
        }
    });
    if (best.witness.empty())
        best.distance = 0;
    return best;
}

MinDistanceResult min_rank_distance_bruteforce(const GabidulinCode& code, std::uint64_t limit) {
    return min_rank_distance_bruteforce(code.generator(), limit);
}

MrdReport verify_mrd(const MatExt& generator, std::uint64_t limit) {
    auto [d, witness] = min_rank_distance_bruteforce(generator, limit);
    MrdReport report;
    report.min_distance = d;
    report.singleton_bound = generator.cols() - generator.rows() + 1;
    report.mrd = d == report.singleton_bound;
    report.witness = std::move(witness);
    return report;
}

MrdReport verify_mrd(const GabidulinCode& code, std::uint64_t limit) {
    return verify_mrd(code.generator(), limit);
}

}  // namespace pumgab
