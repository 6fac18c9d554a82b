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

#include "grc/gf/elimination.hpp"
#include "grc/gf/matrix.hpp"

namespace grc::gf {

/// Coordinates of an element of F_{q^m} in the polynomial basis
/// {1, g, ..., g^{m-1}}, lowest power first.
using ExtSymbol = std::vector<Symbol>;

class ExtensionField;
using ExtFieldPtr = std::shared_ptr<const ExtensionField>;

/// F_{q^m} = F_q[x] / (p(x)) for a monic irreducible p of degree m.
class ExtensionField {
public:
    /// Uses the first irreducible modulus in a fixed enumeration order.
    static ExtFieldPtr create(FieldPtr base, unsigned degree);
    /// `modulus` holds m+1 coefficients, lowest first, leading one.
    static ExtFieldPtr create(FieldPtr base, std::vector<Symbol> modulus);

    const FieldPtr& base() const { return base_; }
    unsigned degree() const { return degree_; }
    const std::vector<Symbol>& modulus() const { return modulus_; }
    std::string name() const;

    ExtSymbol zero() const { return ExtSymbol(degree_, 0); }
    ExtSymbol one() const;
    /// The class of x, generator of the polynomial basis.
    ExtSymbol gamma() const;
    ExtSymbol from_base(Symbol c) const;
    bool contains(const ExtSymbol& a) const;
    bool is_zero(const ExtSymbol& a) const;

    ExtSymbol add(const ExtSymbol& a, const ExtSymbol& b) const;
    ExtSymbol sub(const ExtSymbol& a, const ExtSymbol& b) const;
    ExtSymbol neg(const ExtSymbol& a) const;
    ExtSymbol mul(const ExtSymbol& a, const ExtSymbol& b) const;
    ExtSymbol scale(Symbol c, const ExtSymbol& a) const;
    ExtSymbol inv(const ExtSymbol& a) const;
    ExtSymbol div(const ExtSymbol& a, const ExtSymbol& b) const;
    ExtSymbol pow(const ExtSymbol& a, std::uint64_t e) const;
    /// a^{q^times}.
    ExtSymbol frobenius(const ExtSymbol& a, unsigned times = 1) const;
    /// The unique b with b^{q^times} = a.
    ExtSymbol inverse_frobenius(const ExtSymbol& a, unsigned times = 1) const;

    bool operator==(const ExtensionField& o) const;

private:
    ExtensionField() = default;
    void init();

    FieldPtr base_;
    unsigned degree_ = 1;
    std::vector<Symbol> modulus_;
    Matrix frob_;
    Matrix frob_inv_;
};

/// True when the monic polynomial (lowest coefficient first) is irreducible
/// over `base` (Rabin's test).
bool poly_irreducible(const Field& base, std::span<const Symbol> monic);

/// Element of F_{q^m} tied to its field, with expansion over F_q.
class TowerElement {
public:
    TowerElement(ExtFieldPtr field, ExtSymbol coords);

    const ExtFieldPtr& field() const { return field_; }
    const ExtSymbol& coords() const { return coords_; }
    /// Length-m expansion over F_q in the polynomial basis.
    Vec expand() const { return coords_; }
    static TowerElement recombine(ExtFieldPtr field, const Vec& coords);

    TowerElement operator+(const TowerElement& o) const;
    TowerElement operator-(const TowerElement& o) const;
    TowerElement operator*(const TowerElement& o) const;
    TowerElement operator/(const TowerElement& o) const;
    TowerElement frobenius(unsigned times = 1) const;
    bool operator==(const TowerElement& o) const;

private:
    void require_same(const TowerElement& o) const;

    ExtFieldPtr field_;
    ExtSymbol coords_;
};

/// sum_i a_i x^{q^i}.
TowerElement linearized_eval(std::span<const TowerElement> q_coeffs, const TowerElement& x);
ExtSymbol linearized_eval(const ExtensionField& field, std::span<const ExtSymbol> q_coeffs,
                          const ExtSymbol& x);

/// Elimination policy for extension-field matrices.
struct ExtOps {
    using value_type = ExtSymbol;
    const ExtensionField* f;
    ExtSymbol zero() const { return f->zero(); }
    ExtSymbol one() const { return f->one(); }
    bool is_zero(const ExtSymbol& a) const { return f->is_zero(a); }
    ExtSymbol add(const ExtSymbol& a, const ExtSymbol& b) const { return f->add(a, b); }
    ExtSymbol sub(const ExtSymbol& a, const ExtSymbol& b) const { return f->sub(a, b); }
    ExtSymbol mul(const ExtSymbol& a, const ExtSymbol& b) const { return f->mul(a, b); }
    ExtSymbol inv(const ExtSymbol& a) const { return f->inv(a); }
};

using ExtMatrix = detail::Dense<ExtOps>;

/// F_q-rank of a list of extension elements, via their expansion matrix.
std::size_t rank_over_base(const ExtensionField& field, std::span<const ExtSymbol> elems);

}  // namespace grc::gf
