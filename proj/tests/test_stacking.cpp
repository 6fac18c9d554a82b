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

#include <algorithm>
#include <numeric>
#include <random>

#include "grc/bounds.hpp"
#include "grc/error.hpp"
#include "grc/stacking/stacking.hpp"
#include "test_util.hpp"

using namespace grc;
using namespace grc::stacking;
using B64 = std::vector<std::int64_t>;

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

}  // namespace

TEST_CASE("build_stack on B = {1,1,2,2}") {
    const auto s = build_stack(6, 2, 4, {2, 1, 2, 1});
    CHECK(s.B == B64{1, 1, 2, 2});
    CHECK(s.mu == std::vector<int>{1, 0, 1});
    CHECK(s.S == std::vector<int>{1, 3});
    REQUIRE(s.components.size() == 2);
    CHECK(s.components[0].degree == 4);
    CHECK(s.components[0].l == 3);
    CHECK(s.components[0].M == 6);
    CHECK(s.components[1].degree == 2);
    CHECK(s.components[1].l == 1);
    CHECK(s.components[1].M == 2);
    CHECK(s.l == 4);
    CHECK(s.M == 8);
    const auto j = s.to_json();
    CHECK(j["boundaries"] == nlohmann::json::array({0, 3, 4}));
    CHECK(j["components"][1]["kind"] == "pm");
}

TEST_CASE("uniform downloads give a single component") {
    const auto s = build_stack(8, 3, 5, B64(5, 2));
    CHECK(s.S == std::vector<int>{1});
    CHECK(s.l == 6);
}

TEST_CASE("node size equals Delta_{d-k+1}(B) for random B") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const int k = 1 + static_cast<int>(rng() % 3);
        const int d = k + static_cast<int>(rng() % 5);
        B64 b(static_cast<std::size_t>(d));
        for (auto& x : b) x = 1 + static_cast<std::int64_t>(rng() % 4);
        const auto s = build_stack(d + 1, k, d, b);
        CHECK(s.l == delta_r(b, d - k + 1));
        CHECK(s.M == k * s.l);
        CHECK(CodeParams::msr(d + 1, k, d, b).is_msr());
    }
}

TEST_CASE("unrealizable components are reported") {
    CHECK_THROWS_AS(build_stack(9, 4, 5, B64(5, 1)), ParameterError);
    CHECK_THROWS_AS(build_stack(4, 2, 4, B64(4, 1)), ParameterError);
}

TEST_CASE("stacked code round trip, repair and IP repair") {
    const StackedCode code(build_stack(6, 2, 4, {1, 1, 2, 2}));
    std::mt19937_64 rng(8);
    const Vec zero(static_cast<std::size_t>(code.M()), 0);
    for (const auto& c : code.encode(zero)) CHECK(c == Vec(4, 0));
    const Vec file = test::random_vec(*code.field(), code.M(), rng);
    const auto nodes = code.encode(file);
    for (const auto& c : nodes) CHECK(c.size() == 4);
    for (const auto& s : subsets(6, 2)) {
        NodeContents part;
        for (int i : s) part.push_back(nodes[i]);
        CHECK(code.reconstruct(s, part) == file);
    }
    const std::vector<int> tau_a{4, 3, 2, 1};
    const std::vector<int> tau_b{1, 2, 4, 3};
    for (int f = 0; f < 6; ++f) {
        std::vector<int> others;
        for (int i = 0; i < 6; ++i)
            if (i != f) others.push_back(i);
        for (const auto& idx : subsets(5, 4)) {
            std::vector<int> D;
            for (int i : idx) D.push_back(others[i]);
            for (const auto& tau : {tau_a, tau_b}) {
                const auto r = code.repair(nodes, f, D, tau);
                CHECK(r.content == nodes[f]);
                for (std::size_t i = 0; i < D.size(); ++i) CHECK(r.downloads[i] == (tau[i] >= 3 ? 2 : 1));
            }
            const std::vector<int> a{D[0], D[1], D[2]};
            const auto ip = code.ip_repair(nodes, f, D, a, tau_a);
            CHECK(ip.content == nodes[f]);
            CHECK(ip.compressed);
            CHECK(ip.subset_transmission == 4);
            const auto all = code.ip_repair(nodes, f, D, D, tau_a);
            CHECK(all.total == 4);
            CHECK(all.content == nodes[f]);
            const std::vector<int> small{D[0], D[1]};
            const auto fb = code.ip_repair(nodes, f, D, small, tau_a);
            CHECK_FALSE(fb.compressed);
            CHECK(fb.subset_transmission == 4);
            CHECK(fb.total == 6);
        }
    }
}

TEST_CASE("downloads above the top gap are capped at beta_{d-k+1}") {
    const StackedCode code(build_stack(7, 2, 4, {1, 1, 2, 3}));
    CHECK(code.spec().l == 4);
    std::mt19937_64 rng(1);
    const auto nodes = code.encode(test::random_vec(*code.field(), code.M(), rng));
    const std::vector<int> D{1, 2, 3, 4};
    const auto r = code.repair(nodes, 0, D);
    CHECK(r.content == nodes[0]);
    CHECK(r.downloads == B64{2, 2, 1, 1});
}

TEST_CASE("bad tau and helper sets are rejected") {
    const StackedCode code(build_stack(6, 2, 4, {1, 1, 2, 2}));
    const NodeContents nodes(6, Vec(4, 0));
    const std::vector<int> D{1, 2, 3, 4};
    CHECK_THROWS_AS(code.repair(nodes, 0, D, {1, 1, 2, 3}), ParameterError);
    CHECK_THROWS_AS(code.repair(nodes, 0, std::vector<int>{1, 2, 3}), ParameterError);
    CHECK_THROWS_AS(code.repair(nodes, 1, D), ParameterError);
}

TEST_CASE("linear view of a stacked code") {
    const StackedCode code(build_stack(6, 2, 4, {1, 1, 2, 2}));
    const auto lin = code.linear();
    CHECK(lin.l() == code.l());
    CHECK(lin.M() == code.M());
    std::mt19937_64 rng(12);
    const Vec file = test::random_vec(*code.field(), code.M(), rng);
    CHECK(lin.encode(file) == code.encode(file));

    const std::vector<int> D{1, 2, 3, 4};
    const auto plan = codes::derive_ip_matrices(lin, 0, D);
    auto dl = plan.downloads();
    std::sort(dl.begin(), dl.end());
    CHECK(dl == std::vector<int>{1, 1, 2, 2});
    const auto nodes = lin.encode(file);
    std::vector<Vec> sym;
    for (int h : D) sym.push_back(plan.helper_symbols(h, nodes[h]));
    CHECK(plan.combine(D, sym) == nodes[0]);

    const auto sys = lin.systematic({0, 1});
    const auto sn = sys.encode(file);
    Vec stored = sn[0];
    stored.insert(stored.end(), sn[1].begin(), sn[1].end());
    CHECK(stored == file);
}
