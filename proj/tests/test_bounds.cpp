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

using namespace grc;
using V = std::vector<std::int64_t>;

TEST_CASE("delta and omega") {
    CHECK(delta_r(V{3, 1, 2}, 2) == 3);
    CHECK(delta_r(V{1, 1, 1, 1, 1, 1}, 3) == 3);
    CHECK(delta_r(V{4, 9}, 0) == 0);
    CHECK(omega_r(V{3, 1, 2}, 2) == 5);
    CHECK(omega_r(V(9, 5), 1) == 5);
    CHECK(omega_r(V{3, 1, 2}, 3) == 6);
    CHECK_THROWS_AS(delta_r(V{1, 2}, 3), ParameterError);
    CHECK_THROWS_AS(omega_r(V{1, 2}, -1), ParameterError);
}

TEST_CASE("cutset bound") {
    CodeParams p{5, 1, 2, 10, {2, 3}, 5};
    CHECK(cutset_bound(p).bound == 5);
    CHECK(cutset_bound(p).satisfied);
    p.M = 6;
    CHECK_FALSE(cutset_bound(p).satisfied);

    // Uniform downloads agree with the classical form sum_i min{l, (d-i+1) beta}.
    for (int d = 2; d <= 8; ++d) {
        for (int k = 1; k <= d; ++k) {
            for (std::int64_t beta = 1; beta <= 3; ++beta) {
                for (std::int64_t l = 1; l <= 12; ++l) {
                    CodeParams q{d + 1, k, d, l, V(static_cast<std::size_t>(d), beta), 0};
                    std::int64_t classic = 0;
                    for (int i = 1; i <= k; ++i) classic += std::min<std::int64_t>(l, (d - i + 1) * beta);
                    CHECK(cutset_bound(q).bound == classic);
                }
            }
        }
    }
}

TEST_CASE("storage points") {
    auto pts = msr_mbr_points(6, 2, 4, V{1, 1, 2, 2});
    CHECK(pts.l_msr == 4);
    CHECK(pts.l_mbr == 6);
    auto uni = msr_mbr_points(8, 3, 6, V(6, 1));
    CHECK(uni.l_msr == 4);
    CHECK(uni.l_mbr == 6);
    CHECK(msr_mbr_points(5, 3, 3, V{4, 2, 7}).l_msr == 2);
}

TEST_CASE("IP lower bound") {
    CodeParams pm{7, 4, 6, 3, V(6, 1), 12};
    CHECK(cutset_bound(pm).bound == 12);
    CHECK(ip_lower_bound(pm, true) == 3);
    auto u = CodeParams::msr_uniform(12, 4, 9, 2);
    CHECK(ip_lower_bound(u) == (9 - 4 + 1) * 2);
    CodeParams off{7, 4, 6, 4, V(6, 1), 12};
    CHECK_THROWS_AS(ip_lower_bound(off, true), ParameterError);
    CodeParams fr{9, 3, 6, 5, V{1, 3, 2, 2, 1, 4}, 0};
    CHECK(ip_lower_bound_functional(fr) == std::min<std::int64_t>(fr.l, delta_r(fr.B, 4)));
}

TEST_CASE("adversarial cut bound") {
    auto u = CodeParams::msr_uniform(10, 5, 9, 5);
    CHECK(adversarial_cut_bound(u, 1) == u.l + 2 * 5);
    auto nu = CodeParams::msr(9, 3, 6, V{2, 1, 3, 3, 1, 2});
    CHECK(adversarial_cut_bound(nu, 2) == delta_r(nu.B, 4) + 2 * omega_r(nu.B, 2));
    CHECK(adversarial_cut_bound(nu, 0) == ip_lower_bound(nu));
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(cutset_bound(CodeParams{5, 0, 2, 1, {1, 1}, 1}), ParameterError);
    CHECK_THROWS_AS(cutset_bound(CodeParams{5, 3, 2, 1, {1, 1}, 1}), ParameterError);
    CHECK_THROWS_AS(cutset_bound(CodeParams{5, 2, 5, 1, V(5, 1), 1}), ParameterError);
    CHECK_THROWS_AS(cutset_bound(CodeParams{5, 2, 3, 1, V{1, -1, 1}, 1}), ParameterError);
}

TEST_CASE("randomized properties") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        const int d = 1 + static_cast<int>(rng() % 10);
        const int k = 1 + static_cast<int>(rng() % d);
        V B(static_cast<std::size_t>(d));
        for (auto& b : B) b = static_cast<std::int64_t>(rng() % 7);
        if (delta_r(B, d - k + 1) == 0) B.back() += 1;
        std::int64_t prev_delta = 0;
        std::int64_t prev_omega = 0;
        for (int r = 0; r <= d; ++r) {
            CHECK(delta_r(B, r) >= prev_delta);
            CHECK(omega_r(B, r) >= prev_omega);
            CHECK(delta_r(B, r) <= omega_r(B, r));
            prev_delta = delta_r(B, r);
            prev_omega = omega_r(B, r);
        }
        const auto total = std::accumulate(B.begin(), B.end(), std::int64_t{0});
        CHECK(delta_r(B, d) == total);
        CHECK(omega_r(B, d) == total);
        if (delta_r(B, d - k + 1) == 0) continue;
        auto p = CodeParams::msr(d + 1, k, d, B);
        CHECK(cutset_bound(p).bound == p.M);
        CHECK(ip_lower_bound(p) == p.l);
        CHECK(adversarial_cut_bound(p, 0) == ip_lower_bound(p));
    }
}
