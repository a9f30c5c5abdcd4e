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
#include <optional>
#include <string>
#include <vector>

#include "pumgab/gabidulin.hpp"
#include "pumgab/pum.hpp"

namespace pumgab {

enum class Metric { sum_rank, hamming };
std::string to_string(Metric metric);

struct DistanceBudget {
    // Trellis state classes: q^(s * rank G1) + 1.
    std::uint64_t max_states = std::uint64_t{1} << 20;
    // Branch table entries: state classes times q^(s k) inputs.
    std::uint64_t max_transitions = std::uint64_t{1} << 28;
};

inline constexpr std::uint64_t kDefaultPathLimit = std::uint64_t{1} << 26;

struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational of(long long num, long long den);
    std::string str() const;
    friend bool operator==(const Rational&, const Rational&) = default;
    friend bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
};

enum class FreeDistanceStatus { certified, lower_bound_only };
std::string to_string(FreeDistanceStatus status);

// Extended row distances d_l for l = 1..L under one metric.
//
// d_row[l-1] is empty when no path qualifies: every u_i != 0 for i < l,
// u_i = 0 afterwards, and u_{l-1} G1 = 0 so that c_l vanishes.
struct DistanceProfile {
    std::size_t L = 0;
    Metric metric = Metric::sum_rank;
    std::vector<std::optional<std::size_t>> d_row;

    // Minimum over the computed nonempty orders.
    std::optional<std::size_t> d_free;
    FreeDistanceStatus status = FreeDistanceStatus::lower_bound_only;
    // Order at which every unmerged path already weighs at least d_free.
    std::optional<std::size_t> certified_at;
    // Lower bound on the true free distance: d_free when certified, otherwise
    // the smaller of d_free and the lightest unmerged path at depth L.
    std::optional<std::size_t> d_free_lower_bound;
    // A cycle of zero-weight branches among nonzero states.
    bool zero_weight_cycle = false;
    // Per order: the first minimizing path contains a zero codeword block.
    std::vector<bool> zero_block_in_minimizer;
    std::size_t state_classes = 0;

    std::optional<std::size_t> at(std::size_t ell) const { return d_row.at(ell - 1); }
};

// Layered min-sum search over the trellis. Memory states u_{j-1} are merged
// into classes (u_{j-1} G1, u_{j-1} == 0), which keeps branch weights and the
// return-to-zero condition. Throws std::invalid_argument for L == 0 and
// BudgetExceeded when the state or branch budget would be exceeded.
DistanceProfile row_distance_profile(const UnitMemoryEncoder& encoder,
                                     std::size_t L,
                                     Metric metric = Metric::sum_rank,
                                     const DistanceBudget& budget = {});

// Direct enumeration of every qualifying information path of length ell.
// Throws BudgetExceeded if (q^(s k))^(ell-1) * q^(s dim ker G1) > limit.
std::optional<std::size_t> brute_force_row_distance(const UnitMemoryEncoder& encoder,
                                                    std::size_t ell,
                                                    Metric metric = Metric::sum_rank,
                                                    std::uint64_t limit = kDefaultPathLimit);

struct FreeDistance {
    std::size_t value = 0;
    FreeDistanceStatus status = FreeDistanceStatus::lower_bound_only;
};

// Throws std::invalid_argument if every computed order is empty.
FreeDistance free_rank_distance(const DistanceProfile& profile);

// (d_to - d_from) / (to - from): a finite-window surrogate for the slope.
// Throws std::invalid_argument for an invalid window or empty endpoints.
Rational slope_estimate(const DistanceProfile& profile, std::size_t from, std::size_t to);
// Largest beta with d_l >= slope * l + beta over every computed nonempty order.
Rational intercept_estimate(const DistanceProfile& profile, const Rational& slope);

struct UpperBounds {
    std::size_t d_free_bound = 0;
    std::size_t slope_bound = 0;
};

// UM: d_free <= 2n - k + 1; PUM: d_free <= n - k + k1 + 1; slope <= n - k.
// Throws std::invalid_argument for parameters failing rate_check.
UpperBounds upper_bounds(std::size_t n, std::size_t k, std::size_t k1, std::size_t mH);

// Lower bound on d_l for the normal-basis PUM construction with mH = 1 and
// R >= 1/2: 2(n-k)+1 for l = 1, ceil((l+1)/2) (n-k+1) otherwise.
std::size_t construction_lower_bound(std::size_t ell, std::size_t n, std::size_t k);
bool construction_bound_applies(std::size_t n, std::size_t k, std::size_t k1, std::size_t mH);

struct HammingComparison {
    DistanceProfile rank;
    DistanceProfile hamming;
    bool dominated = true;
    // Orders l where d_l (rank) > d_l (Hamming) or emptiness differs; 0 marks
    // a free-distance violation.
    std::vector<std::size_t> violations;
};

HammingComparison compare_hamming(const UnitMemoryEncoder& encoder,
                                  std::size_t L,
                                  const DistanceBudget& budget = {});

}  // namespace pumgab
