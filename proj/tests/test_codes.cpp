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

#include <numeric>
#include <random>

#include "grc/codes/gpm.hpp"
#include "grc/codes/linear_code.hpp"
#include "grc/codes/pm.hpp"
#include "grc/codes/sympower.hpp"
#include "grc/codes/unit_msr.hpp"
#include "grc/error.hpp"
#include "test_util.hpp"

using namespace grc;
using namespace grc::codes;

namespace {

std::vector<std::vector<int>> subsets(int n, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> idx(r);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        out.push_back(idx);
        int pos = r - 1;
        while (pos >= 0 && idx[pos] == n - r + pos) --pos;
        if (pos < 0) return out;
        ++idx[pos];
        for (int i = pos + 1; i < r; ++i) idx[i] = idx[i - 1] + 1;
    }
}

NodeContents pick(const NodeContents& all, const std::vector<int>& nodes) {
    NodeContents out;
    for (int i : nodes) out.push_back(all[i]);
    return out;
}

}  // namespace

TEST_CASE("symmetric power basis") {
    SymPowerBasis b(3, 2);
    CHECK(b.size() == 6);
    CHECK(b.monomial(0) == std::vector<int>{0, 0});
    CHECK(b.index_of({2, 0}) == b.index_of({0, 2}));
    CHECK(SymPowerBasis(3, 0).size() == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(sym_product({0, 2}, {1}) == std::vector<int>{0, 1, 2});
}

TEST_CASE("product-matrix code round trip over every k-subset") {
    auto code = PmCode::with_default_points(6, 3);
    CHECK(code.d() == 4);
    CHECK(code.l() == 2);
    CHECK(code.M() == 6);
    std::mt19937_64 rng(11);
    const Vec file = test::random_vec(*code.field(), code.M(), rng);
    const auto nodes = code.encode(file);
    for (const auto& s : subsets(6, 3)) {
        CHECK(code.reconstruct(s, pick(nodes, s)) == file);
        CHECK(code.linear().reconstruct(s, pick(nodes, s)) == file);
    }
}

TEST_CASE("product-matrix AF and IP repair agree") {
    auto code = PmCode::with_default_points(7, 4);
    std::mt19937_64 rng(5);
    const Vec file = test::random_vec(*code.field(), code.M(), rng);
    const auto nodes = code.encode(file);
    const int f = 2;
    const std::vector<int> helpers{0, 1, 3, 4, 5, 6};
    std::vector<Symbol> sym;
    for (int h : helpers) sym.push_back(code.helper_symbol(nodes[h], h, f));
    CHECK(code.af_repair(helpers, sym, f) == nodes[f]);

    // Split the helpers and combine partial sums.
    const std::vector<int> a{0, 1, 3};
    const std::vector<int> b{4, 5, 6};
    const std::vector<Symbol> sa(sym.begin(), sym.begin() + 3);
    const std::vector<Symbol> sb(sym.begin() + 3, sym.end());
    const Vec part = code.ip_combine(std::nullopt, a, sa, f, helpers);
    CHECK(code.ip_combine(part, b, sb, f, helpers) == nodes[f]);

    // The generic derivation recovers the same content.
    const auto ip = derive_ip_matrices(code.linear(), f, helpers);
    std::vector<Vec> s;
    for (int h : helpers) s.push_back(ip.helper_symbols(h, nodes[h]));
    CHECK(ip.combine(helpers, s) == nodes[f]);
    CHECK(ip.downloads() == std::vector<int>(6, 1));
}

TEST_CASE("systematic form stores the file on chosen nodes") {
    auto code = PmCode::with_default_points(6, 3).linear().systematic({0, 1, 2});
    std::mt19937_64 rng(9);
    const Vec file = test::random_vec(*code.field(), code.M(), rng);
    const auto nodes = code.encode(file);
    Vec head;
    for (int i = 0; i < 3; ++i) head.insert(head.end(), nodes[i].begin(), nodes[i].end());
    CHECK(head == file);
    CHECK(code.reconstruct(std::vector<int>{3, 4, 5}, pick(nodes, {3, 4, 5})) == file);
}

TEST_CASE("unit MSR codes of every realizable degree") {
    const int n = 9;
    const int k = 3;
    CHECK(unit_realizable(k, 3));
    CHECK(unit_realizable(k, 4));
    CHECK(unit_realizable(k, 8));
    CHECK_FALSE(unit_realizable(4, 5));
    CHECK(unit_kind(k, 3) == UnitKind::mds);
    CHECK(unit_kind(k, 4) == UnitKind::pm);
    CHECK(unit_kind(k, 6) == UnitKind::shortened_pm);
    const std::vector<int> degrees{3, 4, 5, 6, 8};
    auto field = unit_field(n, k, degrees);
    std::mt19937_64 rng(21);
    for (int degree : degrees) {
        CAPTURE(degree);
        auto code = make_unit_msr(field, n, k, degree);
        CHECK(code.l() == degree - k + 1);
        CHECK(code.M() == k * code.l());
        const Vec file = test::random_vec(*field, code.M(), rng);
        const auto nodes = code.encode(file);
        CHECK(code.reconstruct(std::vector<int>{2, 5, 8}, pick(nodes, {2, 5, 8})) == file);
        std::vector<int> helpers;
        for (int i = 1; i <= degree; ++i) helpers.push_back(i);
        const auto ip = derive_ip_matrices(code, 0, helpers);
        std::vector<Vec> s;
        for (int h : helpers) s.push_back(ip.helper_symbols(h, nodes[h]));
        CHECK(ip.combine(helpers, s) == nodes[0]);
        CHECK(ip.downloads() == std::vector<int>(helpers.size(), 1));
    }
    CHECK_THROWS_AS(make_unit_msr(field, n, 4, 5), ParameterError);
}

TEST_CASE("generalized product-matrix code with t = 3") {
    auto code = GpmCode::with_default_points(9, 5, 3);
    CHECK(code.d() == 6);
    CHECK(code.l() == 6);
    CHECK(code.beta() == 3);
    CHECK(code.M() == 30);
    CHECK(code.M() == code.k() * code.l());
    std::mt19937_64 rng(3);
    const Vec file = test::random_vec(*code.field(), code.M(), rng);
    const auto nodes = code.encode(file);
    for (const auto& s : {std::vector<int>{0, 1, 2, 3, 4}, std::vector<int>{4, 5, 6, 7, 8},
                          std::vector<int>{0, 2, 4, 6, 8}})
        CHECK(code.reconstruct(s, pick(nodes, s)) == file);

    const int f = 4;
    const std::vector<int> helpers{0, 1, 2, 5, 7, 8};
    std::vector<Vec> sym;
    for (int h : helpers) {
        sym.push_back(code.helper_symbols(nodes[h], h, f));
        CHECK(sym.back().size() == 3);
    }
    CHECK(code.ip_combine(helpers, sym, f, helpers) == nodes[f]);
    const std::vector<int> left{0, 1, 2};
    const std::vector<int> right{5, 7, 8};
    const Vec a = code.ip_combine(left, {sym[0], sym[1], sym[2]}, f, helpers);
    const Vec b = code.ip_combine(right, {sym[3], sym[4], sym[5]}, f, helpers);
    Vec sum(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) sum[i] = code.field()->add(a[i], b[i]);
    CHECK(sum == nodes[f]);
}

TEST_CASE("t = 2 generalized code matches the product-matrix code") {
    auto field = gf::Field::binary(5);
    auto pm = PmCode::with_default_points(7, 3, field);
    auto gpm = GpmCode::from_points(field, 7, 3, 2, pm.points(), GpmCode::default_x_exponents(3, 2),
                                    GpmCode::default_y_exponents(3, 2));
    CHECK(gpm.d() == pm.d());
    CHECK(gpm.l() == pm.l());
    std::mt19937_64 rng(17);
    const Vec file = test::random_vec(*field, pm.M(), rng);
    CHECK(gpm.encode(file) == pm.encode(file));
}

TEST_CASE("GPM parameter validation") {
    CHECK_THROWS_AS(GpmCode::with_default_points(9, 4, 3), ParameterError);  // (k-1)t/(t-1) = 4.5
    CHECK_THROWS_AS(GpmCode::with_default_points(5, 5, 3), ParameterError);
}
