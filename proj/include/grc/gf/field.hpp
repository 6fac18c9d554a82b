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

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace grc::gf {

/// Raw field symbol. Prime fields store the residue; binary fields store the
/// polynomial-basis coefficients packed as bits (bit i = coefficient of x^i).
using Symbol = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A finite field F_q with q = 2^w (w <= 16) or q = p for an odd prime p.
///
/// Instances are immutable and shared. Binary fields multiply through
/// log/antilog tables; prime fields use 64-bit modular products.
class Field {
public:
    static constexpr unsigned kMaxBinaryDegree = 16;

    /// GF(2^w) with the library's default primitive modulus.
    static FieldPtr binary(unsigned degree);
    /// GF(2^w) with an explicit modulus (bit mask including the x^w term).
    /// Throws ParameterError if the modulus is not irreducible of degree w.
    static FieldPtr binary(unsigned degree, std::uint32_t modulus);
    /// GF(p) for a prime p < 2^31.
    static FieldPtr prime(std::uint32_t p);

    std::uint32_t characteristic() const { return characteristic_; }
    unsigned degree() const { return degree_; }
    std::uint32_t order() const { return order_; }
    bool is_binary() const { return characteristic_ == 2; }
    /// Modulus coefficients, lowest degree first, monic. For prime fields
    /// this is the linear polynomial x (degree 1).
    const std::vector<Symbol>& modulus() const { return modulus_; }
    std::string name() const;

    Symbol zero() const { return 0; }
    Symbol one() const { return 1; }
    bool contains(Symbol a) const { return a < order_; }

    Symbol add(Symbol a, Symbol b) const;
    Symbol sub(Symbol a, Symbol b) const;
    Symbol neg(Symbol a) const;
    Symbol mul(Symbol a, Symbol b) const;
    Symbol inv(Symbol a) const;
    Symbol div(Symbol a, Symbol b) const;
    Symbol pow(Symbol a, std::uint64_t e) const;

    /// A generator of the multiplicative group.
    Symbol primitive_element() const { return primitive_; }
    /// Maps an integer into the field (reduction mod p for prime fields; for
    /// binary fields the value must already be a valid bit pattern).
    Symbol element(std::uint64_t value) const;

    bool operator==(const Field& other) const;

private:
    Field() = default;
    void build_binary_tables();

    std::uint32_t characteristic_ = 2;
    unsigned degree_ = 1;
    std::uint32_t order_ = 2;
    std::uint32_t modulus_bits_ = 0;
    std::vector<Symbol> modulus_;
    Symbol primitive_ = 1;
    std::vector<std::uint32_t> log_;
    std::vector<Symbol> exp_;
};

/// True when the GF(2) polynomial encoded in `bits` is irreducible. Performs
/// trial division by every polynomial of degree 1..deg/2.
bool binary_poly_irreducible(std::uint32_t bits);

/// A field symbol bound to its field. Arithmetic between elements of
/// different fields throws FieldMismatch.
class FieldElement {
public:
    FieldElement(FieldPtr field, Symbol value);

    const FieldPtr& field() const { return field_; }
    Symbol value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;

    bool operator==(const FieldElement& o) const;

private:
    void require_same(const FieldElement& o) const;

    FieldPtr field_;
    Symbol value_;
};

/// Horner evaluation of sum_j coeffs[j] x^j.
Symbol poly_eval(const Field& field, std::span<const Symbol> coeffs, Symbol x);
FieldElement poly_eval(std::span<const FieldElement> coeffs, const FieldElement& x);

}  // namespace grc::gf
