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

#include "pumgab/distance.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

namespace pumgab {

namespace {

constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

std::size_t block_weight(const ExtField& f, std::span<const Felt> v, Metric metric) {
    return metric == Metric::sum_rank ? rank_norm(f, v) : hamming_weight(v);
}

// base^exp, or nullopt when the result exceeds cap.
std::optional<std::uint64_t> capped_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && out > cap / base)
            return std::nullopt;
        out *= base;
    }
    return out;
}

void check_encoder(const UnitMemoryEncoder& e) {
    if (e.g0.rows() != e.g1.rows() || e.g0.cols() != e.g1.cols())
        throw std::invalid_argument("G0 and G1 differ in shape");
    if (e.g0.rows() == 0 || e.g0.cols() == 0)
        throw std::invalid_argument("empty generator matrices");
    if (!same_field(e.g0.field(), e.g1.field()))
        throw std::invalid_argument("G0 and G1 belong to different fields");
}

// Table of u * m for every u in F^k, indexed as in for_each_combination.
std::vector<Felt> image_table(const MatExt& m, std::uint64_t inputs) {
    std::vector<Felt> out;
    out.reserve(inputs * m.cols());
    for_each_combination(m, [&](std::uint64_t, const Vec&, const Vec& c) { out.insert(out.end(), c.begin(), c.end()); });
    return out;
}

bool has_cycle(std::size_t nodes, const std::vector<std::vector<std::uint32_t>>& edges) {
    // Kahn's algorithm: a cycle exists iff some node is never freed.
    std::vector<std::size_t> indeg(nodes, 0);
    for (const auto& out : edges)
        for (auto v : out)
            ++indeg[v];
    std::vector<std::uint32_t> ready;
    for (std::size_t v = 0; v < nodes; ++v)
        if (indeg[v] == 0)
            ready.push_back(static_cast<std::uint32_t>(v));
    std::size_t seen = 0;
    while (!ready.empty()) {
        const auto v = ready.back();
        ready.pop_back();
        ++seen;
        for (auto w : edges[v])
            if (--indeg[w] == 0)
                ready.push_back(w);
    }
    return seen != nodes;
}

}  // namespace

std::string to_string(Metric metric) { return metric == Metric::sum_rank ? "sum_rank" : "hamming"; }

std::string to_string(FreeDistanceStatus status) {
    return status == FreeDistanceStatus::certified ? "certified" : "lower_bound_only";
}

Rational Rational::of(long long num, long long den) {
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

std::string Rational::str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

DistanceProfile row_distance_profile(const UnitMemoryEncoder& encoder,
                                     std::size_t L,
                                     Metric metric,
                                     const DistanceBudget& budget) {
    if (L == 0)
        throw std::invalid_argument("order L must be at least 1");
    check_encoder(encoder);
    const auto& f = encoder.g0.field();
    const std::size_t k = encoder.g0.rows();
    const std::size_t n = encoder.g0.cols();

    const auto states = capped_pow(f.order(), rank_ext(encoder.g1), budget.max_states);
    if (!states || *states + 1 > budget.max_states)
        throw BudgetExceeded("trellis state classes exceed budget of " + std::to_string(budget.max_states));
    const std::uint64_t classes_bound = *states + 1;
    const auto inputs_opt = capped_pow(f.order(), k, budget.max_transitions);
    if (!inputs_opt || *inputs_opt > budget.max_transitions / classes_bound)
        throw BudgetExceeded("trellis branch table exceeds budget of " + std::to_string(budget.max_transitions));
    const std::uint64_t inputs = *inputs_opt;

    const auto img0 = image_table(encoder.g0, inputs);
    const auto img1 = image_table(encoder.g1, inputs);
    auto image = [n](const std::vector<Felt>& table, std::uint64_t u) {
        return std::span<const Felt>(table.data() + u * n, n);
    };

    // Class 0 is the zero state; every nonzero input maps to the class of its
    // G1 image.
    std::map<Vec, std::uint32_t> class_index;
    std::vector<Vec> reps{Vec(n)};
    std::vector<std::uint32_t> class_of(inputs, 0);
    for (std::uint64_t u = 1; u < inputs; ++u) {
        const auto im = image(img1, u);
        Vec key(im.begin(), im.end());
        auto [it, inserted] = class_index.try_emplace(key, static_cast<std::uint32_t>(reps.size()));
        if (inserted)
            reps.push_back(std::move(key));
        class_of[u] = it->second;
    }
    const std::size_t classes = reps.size();
    std::optional<std::uint32_t> zero_image_class;
    if (auto it = class_index.find(Vec(n)); it != class_index.end())
        zero_image_class = it->second;

    // weights[c * inputs + u]: weight of c_j = u G0 + (state image) for state c.
    std::vector<std::uint8_t> weights(classes * inputs, 0);
    std::vector<std::vector<std::uint32_t>> zero_edges(classes);
    Vec block(n);
    for (std::size_t c = 0; c < classes; ++c)
        for (std::uint64_t u = 1; u < inputs; ++u) {
            const auto im = image(img0, u);
            for (std::size_t j = 0; j < n; ++j)
                block[j] = f.add(im[j], reps[c][j]);
            const auto w = block_weight(f, block, metric);
            weights[c * inputs + u] = static_cast<std::uint8_t>(w);
            if (w == 0 && c != 0)
                zero_edges[c].push_back(class_of[u]);
        }
    for (auto& e : zero_edges) {
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
    }

    DistanceProfile profile;
    profile.L = L;
    profile.metric = metric;
    profile.state_classes = classes;
    profile.zero_weight_cycle = has_cycle(classes, zero_edges);

    struct Back {
        std::uint32_t prev = 0;
        std::uint64_t input = 0;
    };
    std::vector<std::vector<Back>> back(L + 1);
    std::vector<std::uint32_t> pot(classes, kInf);
    pot[0] = 0;
    std::optional<std::size_t> candidate;

    for (std::size_t layer = 1; layer <= L; ++layer) {
        std::vector<std::uint32_t> next(classes, kInf);
        back[layer].assign(classes, {});
        for (std::size_t c = 0; c < classes; ++c) {
            if (pot[c] == kInf)
                continue;
            const std::uint8_t* row = weights.data() + c * inputs;
            for (std::uint64_t u = 1; u < inputs; ++u) {
                const std::uint32_t cand = pot[c] + row[u];
                const auto d = class_of[u];
                if (cand < next[d]) {
                    next[d] = cand;
                    back[layer][d] = {static_cast<std::uint32_t>(c), u};
                }
            }
        }
        pot = std::move(next);

        std::optional<std::size_t> d;
        if (zero_image_class && pot[*zero_image_class] != kInf)
            d = pot[*zero_image_class];
        profile.d_row.push_back(d);

        bool zero_block = false;
        if (d) {
            // Walk the first minimizing path back to the zero state.
            std::vector<std::uint64_t> us(layer);
            std::uint32_t cls = *zero_image_class;
            for (std::size_t t = layer; t >= 1; --t) {
                us[t - 1] = back[t][cls].input;
                cls = back[t][cls].prev;
            }
            for (std::size_t t = 0; t < layer && !zero_block; ++t) {
                bool all_zero = true;
                for (std::size_t j = 0; j < n; ++j) {
                    Felt x = image(img0, us[t])[j];
                    if (t > 0)
                        x = f.add(x, image(img1, us[t - 1])[j]);
                    all_zero = all_zero && x.is_zero();
                }
                zero_block = all_zero;
            }
            candidate = candidate ? std::min(*candidate, *d) : *d;
        }
        profile.zero_block_in_minimizer.push_back(zero_block);

        const std::uint32_t lightest = *std::min_element(pot.begin() + 1, pot.end());
        if (!profile.certified_at && candidate && !profile.zero_weight_cycle && lightest >= *candidate)
            profile.certified_at = layer;
        if (layer == L) {
            profile.d_free = candidate;
            if (profile.certified_at) {
                profile.status = FreeDistanceStatus::certified;
                profile.d_free_lower_bound = candidate;
            } else if (candidate) {
                profile.d_free_lower_bound = std::min<std::size_t>(*candidate, lightest);
            } else if (lightest != kInf) {
                profile.d_free_lower_bound = lightest;
            }
        }
    }
    return profile;
}

std::optional<std::size_t> brute_force_row_distance(const UnitMemoryEncoder& encoder,
                                                    std::size_t ell,
                                                    Metric metric,
                                                    std::uint64_t limit) {
    if (ell == 0)
        throw std::invalid_argument("order must be at least 1");
    check_encoder(encoder);
    const auto& fp = encoder.g0.field_ptr();
    const auto& f = *fp;
    const std::size_t k = encoder.g0.rows();
    const std::size_t n = encoder.g0.cols();

    // x G1 = 0 <=> G1^T x^T = 0.
    const MatExt last_space = nullspace_ext(transpose(encoder.g1));
    const auto head = capped_pow(f.order(), k * (ell - 1), limit);
    const auto tail = capped_pow(f.order(), last_space.rows(), limit);
    if (!head || !tail || (*tail != 0 && *head > limit / *tail))
        throw BudgetExceeded("path enumeration exceeds limit of " + std::to_string(limit));
    if (last_space.rows() == 0)
        return std::nullopt;

    // All nonzero information blocks with their images.
    struct Input {
        Vec u, c0, c1;
    };
    auto decode = [&](std::uint64_t index, std::size_t len) {
        Vec u(len);
        for (std::size_t i = 0; i < len; ++i) {
            u[i] = Felt{static_cast<std::uint32_t>(index % f.order())};
            index /= f.order();
        }
        return u;
    };
    std::vector<Input> all_inputs;
    if (ell > 1) {
        const std::uint64_t count = *capped_pow(f.order(), k, limit);
        for (std::uint64_t idx = 1; idx < count; ++idx) {
            Vec u = decode(idx, k);
            all_inputs.push_back({u, vec_mat(encoder.g0, u), vec_mat(encoder.g1, u)});
        }
    }
    std::vector<Input> last_inputs;
    const std::uint64_t last_count = *capped_pow(f.order(), last_space.rows(), limit);
    for (std::uint64_t idx = 1; idx < last_count; ++idx) {
        Vec u = vec_mat(last_space, decode(idx, last_space.rows()));
        last_inputs.push_back({u, vec_mat(encoder.g0, u), vec_mat(encoder.g1, u)});
    }

    std::size_t best = std::numeric_limits<std::size_t>::max();
    const Vec zero(n);
    auto recurse = [&](auto&& self, std::size_t depth, const Vec& prev_c1, std::size_t partial) -> void {
        if (partial >= best)
            return;
        const bool last = depth + 1 == ell;
        for (const auto& in : last ? last_inputs : all_inputs) {
            const Vec c = vec_add(f, in.c0, prev_c1);
            const std::size_t w = partial + block_weight(f, c, metric);
            if (last)
                best = std::min(best, w);
            else
                self(self, depth + 1, in.c1, w);
        }
    };
    recurse(recurse, 0, zero, 0);
    if (best == std::numeric_limits<std::size_t>::max())
        return std::nullopt;
    return best;
}

FreeDistance free_rank_distance(const DistanceProfile& profile) {
    if (!profile.d_free)
        throw std::invalid_argument("every computed extended row distance order is empty");
    return {*profile.d_free, profile.status};
}

Rational slope_estimate(const DistanceProfile& profile, std::size_t from, std::size_t to) {
    if (from == 0 || to <= from || to > profile.d_row.size())
        throw std::invalid_argument("slope window must satisfy 1 <= from < to <= L");
    const auto a = profile.at(from);
    const auto b = profile.at(to);
    if (!a || !b)
        throw std::invalid_argument("slope window endpoint has an empty extended row set");
    return Rational::of(static_cast<long long>(*b) - static_cast<long long>(*a),
                        static_cast<long long>(to - from));
}

Rational intercept_estimate(const DistanceProfile& profile, const Rational& slope) {
    std::optional<Rational> beta;
    for (std::size_t ell = 1; ell <= profile.d_row.size(); ++ell) {
        const auto d = profile.at(ell);
        if (!d)
            continue;
        // d - slope * ell
        const auto cand = Rational::of(static_cast<long long>(*d) * slope.den - slope.num * static_cast<long long>(ell),
                                       slope.den);
        if (!beta || cand < *beta)
            beta = cand;
    }
    if (!beta)
        throw std::invalid_argument("every computed extended row distance order is empty");
    return *beta;
}

UpperBounds upper_bounds(std::size_t n, std::size_t k, std::size_t k1, std::size_t mH) {
    const auto rc = rate_check(n, k, k1, mH);
    switch (rc.kind) {
    case CodeClass::unit_memory:
        return {2 * n - k + 1, n - k};
    case CodeClass::partial_unit_memory:
        return {n - k + k1 + 1, n - k};
    case CodeClass::invalid:
        break;
    }
    throw std::invalid_argument(rc.explanation);
}

std::size_t construction_lower_bound(std::size_t ell, std::size_t n, std::size_t k) {
    if (ell == 0 || k >= n)
        throw std::invalid_argument("construction bound needs l >= 1 and k < n");
    const std::size_t r = n - k;
    if (ell == 1)
        return 2 * r + 1;
    return (ell + 2) / 2 * (r + 1);
}

bool construction_bound_applies(std::size_t n, std::size_t k, std::size_t k1, std::size_t mH) {
    return mH == 1 && 2 * k >= n && rate_check(n, k, k1, mH).kind == CodeClass::partial_unit_memory;
}

HammingComparison compare_hamming(const UnitMemoryEncoder& encoder, std::size_t L, const DistanceBudget& budget) {
    HammingComparison out;
    out.rank = row_distance_profile(encoder, L, Metric::sum_rank, budget);
    out.hamming = row_distance_profile(encoder, L, Metric::hamming, budget);
    for (std::size_t ell = 1; ell <= L; ++ell) {
        const auto r = out.rank.at(ell);
        const auto h = out.hamming.at(ell);
        if (r.has_value() != h.has_value() || (r && *r > *h))
            out.violations.push_back(ell);
    }
    if (out.rank.d_free && out.hamming.d_free && *out.rank.d_free > *out.hamming.d_free)
        out.violations.push_back(0);
    out.dominated = out.violations.empty();
    return out;
}

}  // namespace pumgab
