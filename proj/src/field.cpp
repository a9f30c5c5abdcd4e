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

#include "pumgab/field.hpp"

#include <stdexcept>
#include <string>

#include "pumgab/matrix.hpp"

namespace pumgab {

namespace {

// Remainder of num modulo a monic divisor, coefficients mod q.
std::vector<std::uint32_t> poly_rem_monic(std::uint32_t q,
                                          std::vector<std::uint32_t> num,
                                          std::span<const std::uint32_t> div) {
    const std::size_t dd = div.size() - 1;
    for (std::size_t d = num.size(); d-- > dd;) {
        const std::uint64_t c = num[d];
        if (c == 0)
            continue;
        for (std::size_t j = 0; j <= dd; ++j) {
            const std::uint64_t sub = c * div[j] % q;
            num[d - dd + j] = static_cast<std::uint32_t>((num[d - dd + j] + q - sub) % q);
        }
    }
    num.resize(dd);
    return num;
}

std::vector<std::uint32_t> digits(std::uint64_t v, std::uint32_t q, std::size_t len) {
    std::vector<std::uint32_t> out(len, 0);
    for (std::size_t i = 0; i < len; ++i) {
        out[i] = static_cast<std::uint32_t>(v % q);
        v /= q;
    }
    return out;
}

}  // namespace

bool is_prime(std::uint32_t q) {
    if (q < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0)
            return false;
    return true;
}

bool is_irreducible(std::uint32_t q, std::span<const std::uint32_t> poly) {
    if (poly.empty() || poly.back() == 0)
        return false;
    const std::size_t deg = poly.size() - 1;
    if (deg == 0)
        return false;
    std::vector<std::uint32_t> num(poly.begin(), poly.end());
    for (std::size_t e = 1; e <= deg / 2; ++e) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < e; ++i)
            count *= q;
        for (std::uint64_t low = 0; low < count; ++low) {
            auto div = digits(low, q, e);
            div.push_back(1);
            const auto rem = poly_rem_monic(q, num, div);
            bool zero = true;
            for (auto c : rem)
                zero = zero && c == 0;
            if (zero)
                return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t q, unsigned s) {
    std::uint64_t qs = 1;
    for (unsigned i = 0; i < s; ++i)
        qs *= q;
    for (std::uint64_t low = 0; low < qs; ++low) {
        auto poly = digits(low, q, s);
        poly.push_back(1);
        if (is_irreducible(q, poly))
            return poly;
    }
    throw std::logic_error("no irreducible polynomial found");
}

FieldPtr ExtField::make(std::uint32_t q,
                        unsigned s,
                        std::optional<std::vector<std::uint32_t>> modulus,
                        unsigned max_degree) {
    if (!is_prime(q))
        throw std::invalid_argument("base field order " + std::to_string(q) + " is not prime");
    if (s == 0)
        throw std::invalid_argument("extension degree must be at least 1");
    if (s > max_degree)
        throw std::invalid_argument("extension degree " + std::to_string(s) + " exceeds cap " +
                                    std::to_string(max_degree));
    std::uint64_t order = 1;
    for (unsigned i = 0; i < s; ++i) {
        order *= q;
        if (order > (std::uint64_t{1} << 32))
            throw std::invalid_argument("field order q^s does not fit into 32 bits");
    }

    std::vector<std::uint32_t> mod;
    if (modulus) {
        mod = *modulus;
        if (mod.size() != s + 1)
            throw std::invalid_argument("modulus must have degree exactly " + std::to_string(s));
        for (auto c : mod)
            if (c >= q)
                throw std::invalid_argument("modulus coefficient out of range [0, q)");
        if (mod.back() != 1)
            throw std::invalid_argument("modulus is not monic");
        if (!is_irreducible(q, mod))
            throw std::invalid_argument("modulus is reducible over F_" + std::to_string(q));
    } else {
        mod = default_modulus(q, s);
    }

    auto f = std::shared_ptr<ExtField>(new ExtField());
    f->q_ = q;
    f->s_ = s;
    f->order_ = order;
    f->modulus_ = std::move(mod);
    f->qpow_.resize(s + 1);
    f->qpow_[0] = 1;
    for (unsigned i = 1; i <= s; ++i)
        f->qpow_[i] = f->qpow_[i - 1] * q;

    f->frob_images_.resize(s);
    for (unsigned j = 0; j < s; ++j) {
        Felt xj{static_cast<std::uint32_t>(f->qpow_[j])};
        Felt acc = f->one();
        for (std::uint32_t t = 0; t < q; ++t)
            acc = f->mul_unchecked(acc, xj);
        f->frob_images_[j] = acc;
    }
    return f;
}

bool same_field(const ExtField& a, const ExtField& b) { return &a == &b || a == b; }

void ExtField::check(Felt x) const {
    if (!contains(x))
        throw std::invalid_argument("element " + std::to_string(x.value) +
                                    " does not belong to this field");
}

Felt ExtField::element(std::uint64_t encoding) const {
    if (encoding >= order_)
        throw std::invalid_argument("element encoding " + std::to_string(encoding) +
                                    " out of range for field of order " + std::to_string(order_));
    return Felt{static_cast<std::uint32_t>(encoding)};
}

Felt ExtField::from_coeffs(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() > s_)
        throw std::invalid_argument("too many coefficients for field element");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] >= q_)
            throw std::invalid_argument("coefficient out of range [0, q)");
        v += coeffs[i] * qpow_[i];
    }
    return Felt{static_cast<std::uint32_t>(v)};
}

std::vector<std::uint32_t> ExtField::coeffs(Felt x) const {
    check(x);
    return digits(x.value, q_, s_);
}

std::uint32_t ExtField::coeff(Felt x, unsigned i) const {
    if (q_ == 2)
        return (x.value >> i) & 1u;
    return static_cast<std::uint32_t>(x.value / qpow_[i] % q_);
}

Felt ExtField::add(Felt x, Felt y) const {
    if (q_ == 2)
        return Felt{x.value ^ y.value};
    std::uint64_t a = x.value, b = y.value, out = 0;
    for (unsigned i = 0; i < s_; ++i) {
        out += ((a % q_ + b % q_) % q_) * qpow_[i];
        a /= q_;
        b /= q_;
    }
    return Felt{static_cast<std::uint32_t>(out)};
}

Felt ExtField::neg(Felt x) const {
    if (q_ == 2)
        return x;
    std::uint64_t a = x.value, out = 0;
    for (unsigned i = 0; i < s_; ++i) {
        out += ((q_ - a % q_) % q_) * qpow_[i];
        a /= q_;
    }
    return Felt{static_cast<std::uint32_t>(out)};
}

Felt ExtField::sub(Felt x, Felt y) const { return add(x, neg(y)); }

Felt ExtField::scale(std::uint32_t c, Felt x) const {
    c %= q_;
    if (c == 0)
        return zero();
    if (c == 1)
        return x;
    std::uint64_t a = x.value, out = 0;
    for (unsigned i = 0; i < s_; ++i) {
        out += (std::uint64_t{c} * (a % q_) % q_) * qpow_[i];
        a /= q_;
    }
    return Felt{static_cast<std::uint32_t>(out)};
}

Felt ExtField::mul_unchecked(Felt x, Felt y) const {
    if (q_ == 2) {
        std::uint64_t a = x.value, b = y.value, r = 0;
        for (unsigned i = 0; b != 0; ++i, b >>= 1)
            if (b & 1u)
                r ^= a << i;
        std::uint64_t m = 0;
        for (unsigned i = 0; i <= s_; ++i)
            m |= std::uint64_t{modulus_[i]} << i;
        for (unsigned d = 2 * s_; d-- > s_;)
            if ((r >> d) & 1u)
                r ^= m << (d - s_);
        return Felt{static_cast<std::uint32_t>(r)};
    }
    const auto a = digits(x.value, q_, s_);
    const auto b = digits(y.value, q_, s_);
    std::vector<std::uint32_t> prod(2 * s_ - 1, 0);
    for (unsigned i = 0; i < s_; ++i) {
        if (a[i] == 0)
            continue;
        for (unsigned j = 0; j < s_; ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % q_);
    }
    const auto rem = poly_rem_monic(q_, std::move(prod), modulus_);
    std::uint64_t v = 0;
    for (unsigned i = 0; i < rem.size(); ++i)
        v += rem[i] * qpow_[i];
    return Felt{static_cast<std::uint32_t>(v)};
}

Felt ExtField::mul(Felt x, Felt y) const {
    check(x);
    check(y);
    return mul_unchecked(x, y);
}

Felt ExtField::pow(Felt x, std::uint64_t e) const {
    check(x);
    Felt result = one();
    Felt base = x;
    while (e != 0) {
        if (e & 1u)
            result = mul_unchecked(result, base);
        base = mul_unchecked(base, base);
        e >>= 1;
    }
    return result;
}

Felt ExtField::inv(Felt x) const {
    check(x);
    if (x.is_zero())
        throw std::domain_error("inversion of zero");
    return pow(x, order_ - 2);
}

Felt ExtField::frobenius_once(Felt x) const {
    std::uint32_t acc = 0;
    if (q_ == 2) {
        std::uint32_t v = x.value;
        for (unsigned j = 0; v != 0; ++j, v >>= 1)
            if (v & 1u)
                acc ^= frob_images_[j].value;
        return Felt{acc};
    }
    Felt out = zero();
    for (unsigned j = 0; j < s_; ++j) {
        const auto c = coeff(x, j);
        if (c != 0)
            out = add(out, scale(c, frob_images_[j]));
    }
    return out;
}

Felt ExtField::frobenius(Felt x, std::int64_t i) const {
    check(x);
    const auto s = static_cast<std::int64_t>(s_);
    std::int64_t steps = ((i % s) + s) % s;
    for (; steps > 0; --steps)
        x = frobenius_once(x);
    return x;
}

std::vector<Felt> conjugates(const ExtField& field, Felt x, unsigned count) {
    std::vector<Felt> out;
    out.reserve(count);
    for (unsigned i = 0; i < count; ++i) {
        out.push_back(x);
        x = field.frobenius(x, 1);
    }
    return out;
}

NormalElement find_normal_element(const ExtField& field) {
    for (std::uint64_t v = 1; v < field.order(); ++v) {
        const Felt b{static_cast<std::uint32_t>(v)};
        auto conj = conjugates(field, b, field.s());
        if (rank_norm(field, conj) == field.s())
            return NormalElement{b, std::move(conj)};
    }
    throw std::logic_error("no normal element found; field arithmetic is inconsistent");
}

}  // namespace pumgab
