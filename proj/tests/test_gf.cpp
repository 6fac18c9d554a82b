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

#include <doctest.h>

#include <random>

#include "grc/error.hpp"
#include "grc/gf/extension.hpp"
#include "grc/gf/field.hpp"
#include "grc/gf/matrix.hpp"
#include "test_util.hpp"

using namespace grc;
using namespace grc::gf;

TEST_CASE("prime field arithmetic") {
    auto f = Field::prime(7);
    FieldElement a(f, 3), b(f, 5);
    CHECK((a + b).value() == 1);
    CHECK((a - b).value() == 5);
    CHECK((a * b).value() == 1);
    CHECK((a / b * b) == a);
    CHECK_THROWS_AS(f->inv(0), DivisionByZero);
    CHECK_THROWS_AS(Field::prime(9), ParameterError);
}

TEST_CASE("binary field reduction") {
    auto f = Field::binary(4, 0x13);
    // x^4 = x + 1
    CHECK(f->pow(0b10, 4) == 0b0011);
    for (Symbol x = 1; x < 16; ++x) CHECK(f->mul(x, f->inv(x)) == 1);
    CHECK_THROWS_AS(Field::binary(4, 0x15), ParameterError);  // x^4+x^2+1 = (x^2+x+1)^2
    CHECK(binary_poly_irreducible(0x11D));
    CHECK_FALSE(binary_poly_irreducible(0x11C));
}

TEST_CASE("default binary moduli are irreducible and multiplicative groups are cyclic") {
    for (unsigned w = 1; w <= Field::kMaxBinaryDegree; ++w) {
        auto f = Field::binary(w);
        CHECK(f->order() == (1U << w));
        const Symbol g = f->primitive_element();
        if (w > 1) {
            Symbol p = g;
            std::uint32_t ord = 1;
            while (p != 1) {
                p = f->mul(p, g);
                ++ord;
            }
            CHECK(ord == f->order() - 1);
        }
    }
}

TEST_CASE("field mismatch is rejected") {
    FieldElement a(Field::binary(4), 3);
    FieldElement b(Field::binary(5), 3);
    CHECK_THROWS_AS(a + b, FieldMismatch);
    // Structurally equal fields built separately are the same field.
    FieldElement c(Field::binary(4), 5);
    CHECK((a + c).value() == 6);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(11);
    for (auto f : {Field::binary(4), Field::binary(8), Field::binary(16), Field::prime(7), Field::prime(65521)}) {
        for (int i = 0; i < 500; ++i) {
            const Symbol a = test::random_symbol(*f, rng);
            const Symbol b = test::random_symbol(*f, rng);
            const Symbol c = test::random_symbol(*f, rng);
            CHECK(f->mul(a, f->mul(b, c)) == f->mul(f->mul(a, b), c));
            CHECK(f->add(a, f->add(b, c)) == f->add(f->add(a, b), c));
            CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            CHECK(f->add(a, f->neg(a)) == 0);
            if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
            CHECK(f->sub(f->add(a, b), b) == a);
        }
    }
}

TEST_CASE("poly_eval") {
    auto f = Field::binary(4);
    const std::vector<Symbol> constant{7};
    CHECK(poly_eval(*f, constant, 9) == 7);
    const std::vector<Symbol> ident{0, 1};
    CHECK(poly_eval(*f, ident, 9) == 9);
    auto g2 = Field::binary(1);
    std::vector<FieldElement> ones(3, FieldElement(g2, 1));
    CHECK(poly_eval(ones, FieldElement(g2, 1)).value() == 1);
    CHECK_THROWS_AS(poly_eval(*f, std::vector<Symbol>{}, 1), ParameterError);
    std::vector<FieldElement> mixed{FieldElement(f, 1)};
    CHECK_THROWS_AS(poly_eval(mixed, FieldElement(Field::binary(5), 1)), FieldMismatch);
}

TEST_CASE("matrix rank, solve, invert") {
    auto f = Field::binary(4);
    auto id = Matrix::identity(f, 4);
    CHECK(mat_rank(id) == 4);
    CHECK(mat_invert(id) == id);

    std::vector<Symbol> pts{1, 2, 3};
    auto v = vandermonde(f, pts, 3);
    CHECK(mat_rank(v) == 3);
    CHECK(v * mat_invert(v) == Matrix::identity(f, 3));

    auto u = Matrix::column(f, {1, 5, 7});
    auto w = Matrix::row(f, {3, 0, 9, 2});
    CHECK(mat_rank(u * w) == 1);
    CHECK_THROWS_AS(mat_invert(u * w.col_block(0, 3)), SingularMatrix);

    auto sing = Matrix::from_rows(f, {{1, 1}, {1, 1}});
    CHECK_THROWS_AS(mat_solve(sing, Matrix::column(f, {1, 0})), InconsistentSystem);
    auto x = mat_solve(sing, Matrix::column(f, {1, 1}));
    CHECK(sing * x == Matrix::column(f, {1, 1}));
}

TEST_CASE("random invertible matrices") {
    std::mt19937_64 rng(5);
    for (auto f : {Field::binary(2), Field::binary(8), Field::prime(13)}) {
        for (int trial = 0; trial < 50; ++trial) {
            const std::size_t n = 1 + rng() % 6;
            Matrix a(f, n, n, test::random_vec(*f, n * n, rng));
            if (mat_rank(a) == n) {
                CHECK(mat_invert(a) * a == Matrix::identity(f, n));
            } else {
                CHECK_THROWS_AS(mat_invert(a), SingularMatrix);
            }
            auto ns = mat_nullspace(a);
            CHECK(ns.cols() == n - mat_rank(a));
            if (ns.cols() > 0) CHECK((a * ns).is_zero());
        }
    }
}

TEST_CASE("extension field basics") {
    auto base = Field::binary(1);
    auto e = ExtensionField::create(base, 3);
    CHECK(poly_irreducible(*base, e->modulus()));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        auto a = test::random_ext(*e, rng);
        auto b = test::random_ext(*e, rng);
        if (!e->is_zero(a)) CHECK(e->mul(a, e->inv(a)) == e->one());
        CHECK(e->frobenius(e->add(a, b)) == e->add(e->frobenius(a), e->frobenius(b)));
        CHECK(e->inverse_frobenius(e->frobenius(a, 2), 2) == a);
        CHECK(e->frobenius(a, 3) == a);
    }
    // x^2 at gamma
    std::vector<ExtSymbol> square{e->zero(), e->one()};
    CHECK(linearized_eval(*e, square, e->gamma()) == e->mul(e->gamma(), e->gamma()));
}

TEST_CASE("tower elements round trip and linearized maps are F_q-linear") {
    auto base = Field::binary(5);
    auto e = ExtensionField::create(base, 7);
    std::mt19937_64 rng(9);
    for (int i = 0; i < 1000; ++i) {
        TowerElement t(e, test::random_ext(*e, rng));
        CHECK(TowerElement::recombine(e, t.expand()) == t);
    }
    std::vector<TowerElement> coeffs;
    for (int i = 0; i < 4; ++i) coeffs.emplace_back(e, test::random_ext(*e, rng));
    for (int i = 0; i < 100; ++i) {
        TowerElement x(e, test::random_ext(*e, rng));
        TowerElement y(e, test::random_ext(*e, rng));
        TowerElement a(e, e->from_base(test::random_symbol(*base, rng)));
        TowerElement b(e, e->from_base(test::random_symbol(*base, rng)));
        CHECK(linearized_eval(coeffs, a * x + b * y) ==
              a * linearized_eval(coeffs, x) + b * linearized_eval(coeffs, y));
    }
    std::vector<TowerElement> ident{TowerElement(e, e->one())};
    TowerElement x(e, test::random_ext(*e, rng));
    CHECK(linearized_eval(ident, x) == x);
    auto other = ExtensionField::create(base, 3);
    CHECK_THROWS_AS(x + TowerElement(other, other->one()), FieldMismatch);
}

TEST_CASE("extension over a prime base") {
    auto e = ExtensionField::create(Field::prime(7), 4);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 100; ++i) {
        auto a = test::random_ext(*e, rng);
        if (e->is_zero(a)) continue;
        CHECK(e->mul(a, e->inv(a)) == e->one());
        CHECK(e->pow(a, 7 * 7 * 7 * 7 - 1) == e->one());
    }
}
