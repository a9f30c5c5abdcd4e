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
#include <stdexcept>

#include "pumgab/matrix.hpp"

namespace pumgab {

// Thrown when an exhaustive search would exceed its configured limit.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultCodewordLimit = std::uint64_t{1} << 24;

// An (n, k) Gabidulin code given by its defining vector h.
//
// parity_check() is the (n-k) x n Frobenius matrix of h and generator() is a
// k x n basis of its right kernel in reduced echelon form.
class GabidulinCode {
public:
    // Throws std::invalid_argument unless 0 < k < n <= s and the entries of h
    // are linearly independent over F_q.
    GabidulinCode(FieldPtr field, Vec h, std::size_t k);

    const ExtField& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    std::size_t n() const { return h_.size(); }
    std::size_t k() const { return k_; }
    const Vec& h() const { return h_; }
    const MatExt& parity_check() const { return parity_check_; }
    const MatExt& generator() const { return generator_; }
    std::size_t designed_distance() const { return n() - k_ + 1; }

    Vec encode(std::span<const Felt> u) const;
    bool is_codeword(std::span<const Felt> c) const;

private:
    FieldPtr field_;
    Vec h_;
    std::size_t k_;
    MatExt parity_check_;
    MatExt generator_;
};

struct MinDistanceResult {
    std::size_t distance = 0;
    Vec witness;  // a nonzero codeword of minimum rank norm
};

// Minimum rank norm over all nonzero codewords spanned by the generator rows.
// Throws BudgetExceeded if q^(s*k) > limit.
MinDistanceResult min_rank_distance_bruteforce(const MatExt& generator,
                                               std::uint64_t limit = kDefaultCodewordLimit);
MinDistanceResult min_rank_distance_bruteforce(const GabidulinCode& code,
                                               std::uint64_t limit = kDefaultCodewordLimit);

struct MrdReport {
    bool mrd = false;
    std::size_t min_distance = 0;
    std::size_t singleton_bound = 0;  // n - k + 1
    Vec witness;
};

MrdReport verify_mrd(const MatExt& generator, std::uint64_t limit = kDefaultCodewordLimit);
MrdReport verify_mrd(const GabidulinCode& code, std::uint64_t limit = kDefaultCodewordLimit);

}  // namespace pumgab
