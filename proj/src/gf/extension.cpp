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

#include "grc/gf/extension.hpp"

#include <sstream>

#include "grc/error.hpp"

namespace grc::gf {
namespace {

using Poly = std::vector<Symbol>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a modulo a nonzero polynomial m.
Poly poly_rem(const Field& f, Poly a, const Poly& m) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const Symbol lead_inv = f.inv(m.back());
    while (a.size() > dm) {
        const Symbol c = f.mul(a.back(), lead_inv);
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, m[i]));
        trim(a);
    }
    return a;
}

Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    }
    return out;
}

Poly poly_sub(const Field& f, Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
    trim(a);
    return a;
}

Poly poly_powmod(const Field& f, Poly base, std::uint64_t e, const Poly& m) {
    Poly r{1};
    base = poly_rem(f, std::move(base), m);
    while (e != 0) {
        if (e & 1U) r = poly_rem(f, poly_mul(f, r, base), m);
        base = poly_rem(f, poly_mul(f, base, base), m);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(const Field& f, Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<unsigned> prime_divisors(unsigned v) {
    std::vector<unsigned> out;
    for (unsigned p = 2; p * p <= v; ++p) {
        if (v % p == 0) {
            out.push_back(p);
            while (v % p == 0) v /= p;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

}  // namespace

bool poly_irreducible(const Field& base, std::span<const Symbol> monic) {
    Poly m(monic.begin(), monic.end());
    trim(m);
    if (m.size() < 2 || m.back() != 1) return false;
    const unsigned deg = static_cast<unsigned>(m.size() - 1);
    if (deg == 1) return true;
    const std::uint64_t q = base.order();
    // xs[i] = x^{q^i} mod m
    std::vector<Poly> xs{Poly{0, 1}};
    for (unsigned i = 1; i <= deg; ++i) xs.push_back(poly_powmod(base, xs.back(), q, m));
    Poly x = poly_rem(base, Poly{0, 1}, m);
    if (poly_sub(base, xs[deg], x).size() != 0) return false;
    for (unsigned p : prime_divisors(deg)) {
        Poly g = poly_gcd(base, poly_sub(base, xs[deg / p], x), m);
        if (g.size() != 1) return false;
    }
    return true;
}

ExtFieldPtr ExtensionField::create(FieldPtr base, unsigned degree) {
    if (!base) throw ParameterError("extension requires a base field");
    if (degree == 0) throw ParameterError("extension degree must be positive");
    const std::uint64_t q = base->order();
    // Enumerate monic candidates by the integer whose base-q digits are the
    // low coefficients.
    for (std::uint64_t code = 0;; ++code) {
        Poly cand(degree + 1, 0);
        cand[degree] = 1;
        std::uint64_t c = code;
        bool overflow = false;
        for (unsigned i = 0; i < degree; ++i) {
            cand[i] = static_cast<Symbol>(c % q);
            c /= q;
        }
        if (c != 0) overflow = true;
        if (overflow) break;
        if (poly_irreducible(*base, cand)) return create(base, cand);
    }
    throw ParameterError("no irreducible polynomial found");
}

ExtFieldPtr ExtensionField::create(FieldPtr base, std::vector<Symbol> modulus) {
    if (!base) throw ParameterError("extension requires a base field");
    if (modulus.size() < 2 || modulus.back() != 1) throw ParameterError("modulus must be monic of degree >= 1");
    for (auto s : modulus)
        if (!base->contains(s)) throw ParameterError("modulus coefficient outside base field");
    if (!poly_irreducible(*base, modulus)) throw ParameterError("modulus is not irreducible");
    auto e = std::shared_ptr<ExtensionField>(new ExtensionField());
    e->base_ = std::move(base);
    e->degree_ = static_cast<unsigned>(modulus.size() - 1);
    e->modulus_ = std::move(modulus);
    e->init();
    return e;
}

void ExtensionField::init() {
    const std::uint64_t q = base_->order();
    frob_ = Matrix(base_, degree_, degree_);
    for (unsigned j = 0; j < degree_; ++j) {
        ExtSymbol basis = zero();
        basis[j] = 1;
        const ExtSymbol img = pow(basis, q);
        for (unsigned i = 0; i < degree_; ++i) frob_.at(i, j) = img[i];
    }
    frob_inv_ = mat_invert(frob_);
}

std::string ExtensionField::name() const {
    std::ostringstream os;
    os << base_->name() << "^" << degree_;
    return os.str();
}

ExtSymbol ExtensionField::one() const {
    ExtSymbol o = zero();
    o[0] = 1;
    return o;
}

ExtSymbol ExtensionField::gamma() const {
    if (degree_ == 1) return ExtSymbol{base_->neg(modulus_[0])};
    ExtSymbol g = zero();
    g[1] = 1;
    return g;
}

ExtSymbol ExtensionField::from_base(Symbol c) const {
    if (!base_->contains(c)) throw ParameterError("symbol outside base field");
    ExtSymbol o = zero();
    o[0] = c;
    return o;
}

bool ExtensionField::contains(const ExtSymbol& a) const {
    if (a.size() != degree_) return false;
    for (auto s : a)
        if (!base_->contains(s)) return false;
    return true;
}

bool ExtensionField::is_zero(const ExtSymbol& a) const {
    for (auto s : a)
        if (s != 0) return false;
    return true;
}

ExtSymbol ExtensionField::add(const ExtSymbol& a, const ExtSymbol& b) const {
    ExtSymbol out(degree_);
    for (unsigned i = 0; i < degree_; ++i) out[i] = base_->add(a[i], b[i]);
    return out;
}

ExtSymbol ExtensionField::sub(const ExtSymbol& a, const ExtSymbol& b) const {
    ExtSymbol out(degree_);
    for (unsigned i = 0; i < degree_; ++i) out[i] = base_->sub(a[i], b[i]);
    return out;
}

ExtSymbol ExtensionField::neg(const ExtSymbol& a) const {
    ExtSymbol out(degree_);
    for (unsigned i = 0; i < degree_; ++i) out[i] = base_->neg(a[i]);
    return out;
}

ExtSymbol ExtensionField::scale(Symbol c, const ExtSymbol& a) const {
    ExtSymbol out(degree_);
    for (unsigned i = 0; i < degree_; ++i) out[i] = base_->mul(c, a[i]);
    return out;
}

ExtSymbol ExtensionField::mul(const ExtSymbol& a, const ExtSymbol& b) const {
    const Field& f = *base_;
    std::vector<Symbol> prod(2 * degree_ - 1, 0);
    for (unsigned i = 0; i < degree_; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < degree_; ++j) prod[i + j] = f.add(prod[i + j], f.mul(a[i], b[j]));
    }
    // Reduce with the monic modulus from the top down.
    for (std::size_t top = prod.size(); top-- > degree_;) {
        const Symbol c = prod[top];
        if (c == 0) continue;
        const std::size_t shift = top - degree_;
        for (unsigned i = 0; i < degree_; ++i) prod[shift + i] = f.sub(prod[shift + i], f.mul(c, modulus_[i]));
        prod[top] = 0;
    }
    prod.resize(degree_);
    return prod;
}

ExtSymbol ExtensionField::inv(const ExtSymbol& a) const {
    if (is_zero(a)) throw DivisionByZero();
    const Field& f = *base_;
    // Extended Euclid: track s with s*a = r (mod modulus).
    Poly r0 = modulus_;
    Poly r1(a.begin(), a.end());
    trim(r1);
    Poly s0;
    Poly s1{1};
    while (r1.size() > 1) {
        Poly q;
        Poly r = r0;
        const Symbol lead_inv = f.inv(r1.back());
        q.assign(r.size() >= r1.size() ? r.size() - r1.size() + 1 : 1, 0);
        while (r.size() >= r1.size() && !r.empty()) {
            const Symbol c = f.mul(r.back(), lead_inv);
            const std::size_t shift = r.size() - r1.size();
            q[shift] = c;
            for (std::size_t i = 0; i < r1.size(); ++i) r[shift + i] = f.sub(r[shift + i], f.mul(c, r1[i]));
            trim(r);
        }
        Poly s = poly_sub(f, s0, poly_mul(f, q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r1 is a nonzero constant.
    const Symbol c_inv = f.inv(r1[0]);
    ExtSymbol out = zero();
    for (std::size_t i = 0; i < s1.size() && i < degree_; ++i) out[i] = f.mul(s1[i], c_inv);
    return out;
}

ExtSymbol ExtensionField::div(const ExtSymbol& a, const ExtSymbol& b) const { return mul(a, inv(b)); }

ExtSymbol ExtensionField::pow(const ExtSymbol& a, std::uint64_t e) const {
    ExtSymbol r = one();
    ExtSymbol b = a;
    while (e != 0) {
        if (e & 1U) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

ExtSymbol ExtensionField::frobenius(const ExtSymbol& a, unsigned times) const {
    ExtSymbol out = a;
    for (unsigned i = 0; i < times % degree_; ++i) out = frob_.apply(out);
    return out;
}

ExtSymbol ExtensionField::inverse_frobenius(const ExtSymbol& a, unsigned times) const {
    ExtSymbol out = a;
    for (unsigned i = 0; i < times % degree_; ++i) out = frob_inv_.apply(out);
    return out;
}

bool ExtensionField::operator==(const ExtensionField& o) const {
    return degree_ == o.degree_ && modulus_ == o.modulus_ && *base_ == *o.base_;
}

TowerElement::TowerElement(ExtFieldPtr field, ExtSymbol coords) : field_(std::move(field)), coords_(std::move(coords)) {
    if (!field_) throw ParameterError("null extension field");
    if (!field_->contains(coords_)) throw ParameterError("coordinates outside extension field");
}

TowerElement TowerElement::recombine(ExtFieldPtr field, const Vec& coords) {
    return TowerElement(std::move(field), coords);
}

void TowerElement::require_same(const TowerElement& o) const {
    if (field_ != o.field_ && !(*field_ == *o.field_)) throw FieldMismatch();
}

TowerElement TowerElement::operator+(const TowerElement& o) const {
    require_same(o);
    return {field_, field_->add(coords_, o.coords_)};
}
TowerElement TowerElement::operator-(const TowerElement& o) const {
    require_same(o);
    return {field_, field_->sub(coords_, o.coords_)};
}
TowerElement TowerElement::operator*(const TowerElement& o) const {
    require_same(o);
    return {field_, field_->mul(coords_, o.coords_)};
}
TowerElement TowerElement::operator/(const TowerElement& o) const {
    require_same(o);
    return {field_, field_->div(coords_, o.coords_)};
}
TowerElement TowerElement::frobenius(unsigned times) const { return {field_, field_->frobenius(coords_, times)}; }
bool TowerElement::operator==(const TowerElement& o) const {
    require_same(o);
    return coords_ == o.coords_;
}

ExtSymbol linearized_eval(const ExtensionField& field, std::span<const ExtSymbol> q_coeffs, const ExtSymbol& x) {
    ExtSymbol acc = field.zero();
    ExtSymbol xp = x;
    for (std::size_t i = 0; i < q_coeffs.size(); ++i) {
        if (i > 0) xp = field.frobenius(xp);
        acc = field.add(acc, field.mul(q_coeffs[i], xp));
    }
    return acc;
}

TowerElement linearized_eval(std::span<const TowerElement> q_coeffs, const TowerElement& x) {
    std::vector<ExtSymbol> raw;
    raw.reserve(q_coeffs.size());
    for (const auto& c : q_coeffs) {
        if (c.field() != x.field() && !(*c.field() == *x.field())) throw FieldMismatch();
        raw.push_back(c.coords());
    }
    return {x.field(), linearized_eval(*x.field(), raw, x.coords())};
}

std::size_t rank_over_base(const ExtensionField& field, std::span<const ExtSymbol> elems) {
    if (elems.empty()) return 0;
    Matrix m(field.base(), field.degree(), elems.size());
    for (std::size_t c = 0; c < elems.size(); ++c)
        for (unsigned r = 0; r < field.degree(); ++r) m.at(r, c) = elems[c][r];
    return mat_rank(m);
}

}  // namespace grc::gf
