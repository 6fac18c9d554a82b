// Copyright 2026 The grc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "grc/gf/field.hpp"

#include <array>
#include <bit>
#include <sstream>

#include "grc/error.hpp"

namespace grc::gf {
namespace {

constexpr std::array<std::uint32_t, 17> kDefaultBinaryModulus = {
    0x0,    0x3,    0x7,    0xB,    0x13,   0x25,   0x43,   0x89,    0x11D,
    0x211,  0x409,  0x805,  0x1053, 0x201B, 0x4443, 0x8003, 0x1100B,
};

int bit_degree(std::uint64_t v) { return v == 0 ? -1 : 63 - std::countl_zero(v); }

std::uint64_t clmul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod, int deg) {
    std::uint64_t r = 0;
    while (b != 0) {
        if (b & 1U) r ^= a;
        b >>= 1;
        a <<= 1;
        if ((a >> deg) & 1U) a ^= mod;
    }
    return r;
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
    const int dm = bit_degree(m);
    for (int da = bit_degree(a); da >= dm; da = bit_degree(a)) a ^= m << (da - dm);
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= v; ++p) {
        if (v % p == 0) {
            out.push_back(p);
            while (v % p == 0) v /= p;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t pow_mod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e != 0) {
        if (e & 1U) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

}  // namespace

bool binary_poly_irreducible(std::uint32_t bits) {
    const int deg = bit_degree(bits);
    if (deg < 1) return false;
    if (deg == 1) return true;
    // A root at 0 or 1 means a linear factor.
    if ((bits & 1U) == 0) return false;
    if (std::popcount(bits) % 2 == 0) return false;
    for (std::uint64_t div = 2; bit_degree(div) <= deg / 2; ++div) {
        if (poly_mod(bits, div) == 0) return false;
    }
    return true;
}

FieldPtr Field::binary(unsigned degree) {
    if (degree == 0 || degree > kMaxBinaryDegree)
        throw ParameterError("binary field degree must be in [1, 16]");
    return binary(degree, kDefaultBinaryModulus[degree]);
}

FieldPtr Field::binary(unsigned degree, std::uint32_t modulus) {
    if (degree == 0 || degree > kMaxBinaryDegree)
        throw ParameterError("binary field degree must be in [1, 16]");
    if (bit_degree(modulus) != static_cast<int>(degree))
        throw ParameterError("modulus degree does not match field degree");
    if (!binary_poly_irreducible(modulus))
        throw ParameterError("modulus is not irreducible over GF(2)");
    auto f = std::shared_ptr<Field>(new Field());
    f->characteristic_ = 2;
    f->degree_ = degree;
    f->order_ = 1U << degree;
    f->modulus_bits_ = modulus;
    for (unsigned i = 0; i <= degree; ++i) f->modulus_.push_back((modulus >> i) & 1U);
    f->build_binary_tables();
    return f;
}

FieldPtr Field::prime(std::uint32_t p) {
    if (p == 2) return binary(1);
    if (p >= (1U << 31) || !is_prime(p)) throw ParameterError("GF(p) requires a prime p < 2^31");
    auto f = std::shared_ptr<Field>(new Field());
    f->characteristic_ = p;
    f->degree_ = 1;
    f->order_ = p;
    f->modulus_ = {0, 1};
    const auto factors = prime_factors(p - 1);
    for (Symbol g = 2; g < p; ++g) {
        bool generator = true;
        for (auto r : factors) {
            if (pow_mod_u64(g, (p - 1) / r, p) == 1) {
                generator = false;
                break;
            }
        }
        if (generator) {
            f->primitive_ = g;
            break;
        }
    }
    return f;
}

void Field::build_binary_tables() {
    const std::uint32_t group = order_ - 1;
    const auto factors = prime_factors(group);
    const int deg = static_cast<int>(degree_);
    auto slow_pow = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e != 0) {
            if (e & 1U) r = clmul_mod(r, a, modulus_bits_, deg);
            a = clmul_mod(a, a, modulus_bits_, deg);
            e >>= 1;
        }
        return r;
    };
    primitive_ = 1;
    if (group > 1) {
        for (std::uint64_t g = 2; g < order_; ++g) {
            bool generator = true;
            for (auto r : factors) {
                if (slow_pow(g, group / r) == 1) {
                    generator = false;
                    break;
                }
            }
            if (generator) {
                primitive_ = static_cast<Symbol>(g);
                break;
            }
        }
    }
    exp_.assign(2 * static_cast<std::size_t>(group) + 1, 0);
    log_.assign(order_, 0);
    std::uint64_t v = 1;
    for (std::uint32_t i = 0; i < group; ++i) {
        exp_[i] = static_cast<Symbol>(v);
        log_[v] = i;
        v = clmul_mod(v, primitive_, modulus_bits_, deg);
    }
    for (std::uint32_t i = group; i < exp_.size(); ++i) exp_[i] = exp_[i - group];
}

std::string Field::name() const {
    std::ostringstream os;
    if (is_binary())
        os << "GF(2^" << degree_ << ")";
    else
        os << "GF(" << characteristic_ << ")";
    return os.str();
}

Symbol Field::add(Symbol a, Symbol b) const {
    if (is_binary()) return a ^ b;
    const std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    return static_cast<Symbol>(s >= order_ ? s - order_ : s);
}

Symbol Field::sub(Symbol a, Symbol b) const {
    if (is_binary()) return a ^ b;
    return a >= b ? a - b : static_cast<Symbol>(static_cast<std::uint64_t>(a) + order_ - b);
}

Symbol Field::neg(Symbol a) const {
    if (is_binary() || a == 0) return a;
    return order_ - a;
}

Symbol Field::mul(Symbol a, Symbol b) const {
    if (a == 0 || b == 0) return 0;
    if (is_binary()) return exp_[log_[a] + log_[b]];
    return static_cast<Symbol>(static_cast<std::uint64_t>(a) * b % order_);
}

Symbol Field::inv(Symbol a) const {
    if (a == 0) throw DivisionByZero();
    if (is_binary()) return exp_[(order_ - 1) - log_[a]];
    return static_cast<Symbol>(pow_mod_u64(a, order_ - 2, order_));
}

Symbol Field::div(Symbol a, Symbol b) const {
    if (b == 0) throw DivisionByZero();
    if (a == 0) return 0;
    if (is_binary()) return exp_[log_[a] + (order_ - 1) - log_[b]];
    return mul(a, inv(b));
}

Symbol Field::pow(Symbol a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (is_binary()) {
        const std::uint64_t group = order_ - 1;
        return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % group)) % group];
    }
    return static_cast<Symbol>(pow_mod_u64(a, e, order_));
}

Symbol Field::element(std::uint64_t value) const {
    if (is_binary()) {
        if (value >= order_) throw ParameterError("value outside binary field");
        return static_cast<Symbol>(value);
    }
    return static_cast<Symbol>(value % order_);
}

bool Field::operator==(const Field& other) const {
    return characteristic_ == other.characteristic_ && degree_ == other.degree_ &&
           modulus_ == other.modulus_;
}

FieldElement::FieldElement(FieldPtr field, Symbol value) : field_(std::move(field)), value_(value) {
    if (!field_) throw ParameterError("null field");
    if (!field_->contains(value_)) throw ParameterError("symbol outside field");
}

void FieldElement::require_same(const FieldElement& o) const {
    if (field_ != o.field_ && !(*field_ == *o.field_)) throw FieldMismatch();
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same(o);
    return {field_, field_->add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same(o);
    return {field_, field_->sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same(o);
    return {field_, field_->mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
    require_same(o);
    return {field_, field_->div(value_, o.value_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }
FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }

bool FieldElement::operator==(const FieldElement& o) const {
    require_same(o);
    return value_ == o.value_;
}

Symbol poly_eval(const Field& field, std::span<const Symbol> coeffs, Symbol x) {
    if (coeffs.empty()) throw ParameterError("empty coefficient list");
    Symbol acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = field.add(field.mul(acc, x), *it);
    return acc;
}

FieldElement poly_eval(std::span<const FieldElement> coeffs, const FieldElement& x) {
    if (coeffs.empty()) throw ParameterError("empty coefficient list");
    FieldElement acc(x.field(), 0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace grc::gf
