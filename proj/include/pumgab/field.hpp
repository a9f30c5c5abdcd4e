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

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace pumgab {

// One element of F_{q^s}, stored as its integer encoding sum(coeffs[i] * q^i)
// in the polynomial basis of the owning field's modulus.
struct Felt {
    std::uint32_t value = 0;

    constexpr Felt() = default;
    constexpr explicit Felt(std::uint32_t v) : value(v) {}

    constexpr bool is_zero() const { return value == 0; }
    friend constexpr auto operator<=>(Felt, Felt) = default;
};

class ExtField;
using FieldPtr = std::shared_ptr<const ExtField>;

inline constexpr unsigned kDefaultMaxDegree = 24;

// The finite field F_{q^s} = F_q[x] / (modulus) for a prime q.
//
// Immutable after construction. The modulus is verified monic and irreducible
// by trial division; the q-power Frobenius map is precomputed as the images of
// the polynomial basis so that x^[i] costs i linear-map applications.
class ExtField {
public:
    // Throws std::invalid_argument if q is not prime, s == 0, s > max_degree,
    // q^s does not fit into 32 bits, or the modulus is not monic irreducible
    // of degree s. Without a modulus the smallest irreducible one (by integer
    // encoding of its coefficient list) is selected.
    static FieldPtr make(std::uint32_t q,
                         unsigned s,
                         std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                         unsigned max_degree = kDefaultMaxDegree);

    std::uint32_t q() const { return q_; }
    unsigned s() const { return s_; }
    std::uint64_t order() const { return order_; }
    // Coefficients c_0..c_s, constant term first, c_s == 1.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Felt zero() const { return Felt{0}; }
    Felt one() const { return Felt{1}; }
    bool contains(Felt x) const { return x.value < order_; }
    // Range-checked construction from an integer encoding.
    Felt element(std::uint64_t encoding) const;
    Felt from_coeffs(std::span<const std::uint32_t> coeffs) const;
    std::vector<std::uint32_t> coeffs(Felt x) const;
    // Coefficient i of x in the polynomial basis.
    std::uint32_t coeff(Felt x, unsigned i) const;

    Felt add(Felt x, Felt y) const;
    Felt sub(Felt x, Felt y) const;
    Felt neg(Felt x) const;
    Felt mul(Felt x, Felt y) const;
    Felt scale(std::uint32_t c, Felt x) const;  // c in F_q
    Felt inv(Felt x) const;                      // throws std::domain_error on zero
    Felt pow(Felt x, std::uint64_t e) const;
    // x^(q^i); i is reduced modulo s.
    Felt frobenius(Felt x, std::int64_t i) const;

    // Images (x^j)^q, j = 0..s-1: the columns of the Frobenius matrix.
    const std::vector<Felt>& frobenius_images() const { return frob_images_; }

    friend bool operator==(const ExtField& a, const ExtField& b) {
        return a.q_ == b.q_ && a.modulus_ == b.modulus_;
    }

private:
    ExtField() = default;

    Felt mul_unchecked(Felt x, Felt y) const;
    Felt frobenius_once(Felt x) const;
    void check(Felt x) const;

    std::uint32_t q_ = 2;
    unsigned s_ = 1;
    std::uint64_t order_ = 2;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint64_t> qpow_;  // q^0 .. q^s
    std::vector<Felt> frob_images_;
};

bool same_field(const ExtField& a, const ExtField& b);

// Polynomial irreducibility over F_q by trial division against every monic
// polynomial of degree <= deg/2. Coefficients are constant term first.
bool is_irreducible(std::uint32_t q, std::span<const std::uint32_t> poly);
bool is_prime(std::uint32_t q);

// Smallest monic irreducible polynomial of degree s over F_q by ascending
// coefficient-integer encoding.
std::vector<std::uint32_t> default_modulus(std::uint32_t q, unsigned s);

// A normal element b: {b^[0], ..., b^[s-1]} is a basis of F over F_q.
struct NormalElement {
    Felt b;
    // b^[0], ..., b^[s-1]
    std::vector<Felt> basis;
};

// First element in ascending integer-encoding order (skipping 0) whose
// conjugates are linearly independent over F_q.
NormalElement find_normal_element(const ExtField& field);

// Conjugates x^[0], ..., x^[count-1].
std::vector<Felt> conjugates(const ExtField& field, Felt x, unsigned count);

}  // namespace pumgab
