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

#include "grc/codes/gpm.hpp"
#include "grc/codes/pm.hpp"
#include "grc/error.hpp"
#include "grc/graphrepair/graphrepair.hpp"
#include "test_util.hpp"

using namespace grc;
using namespace grc::graphrepair;
using graph::StorageGraph;

namespace {

StorageGraph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    StorageGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

std::vector<int> range(int a, int b) {
    std::vector<int> out;
    for (int i = a; i < b; ++i) out.push_back(i);
    return out;
}

const StorageGraph fig3 = from_edges(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {1, 5}, {0, 6}});
const StorageGraph fig4 = from_edges(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
const StorageGraph fig5 =
    from_edges(10, {{0, 1}, {0, 8}, {0, 9}, {1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 6}, {3, 7}});
// f=0, a=1, p=2, b=3, c=4, e=5, g=6
const StorageGraph layered = from_edges(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {3, 5}, {3, 6}});

}  // namespace

TEST_CASE("scheme names") {
    CHECK(parse_scheme("ip-nu") == Scheme::ip_nu);
    CHECK(std::string(to_string(Scheme::af_u)) == "af-u");
    CHECK_THROWS_AS(parse_scheme("ip"), ParameterError);
}

TEST_CASE("complete graph gives a star tree") {
    const auto g = StorageGraph::complete(8);
    const auto t = build_repair_tree(g, 3, range(4, 8), 2);
    CHECK(t.height() == 1);
    for (int h : t.helpers) CHECK(t.sigma[h] == 0);
    CHECK(t.J.empty());
    CHECK(lambda_af_uniform(t, 3, 4, 2).total == Rational(4));
    CHECK(lambda_ip_uniform(t, 3, 4, 2).total == Rational(4));
}

TEST_CASE("fig3 tree") {
    const auto t = build_repair_tree(fig3, 0, range(1, 7), 4);
    CHECK(t.layer_sizes() == std::vector<int>{3, 3});
    CHECK(t.J == std::vector<int>{1});
    CHECK(t.sigma[1] == 3);
    CHECK(t.ip_ancestor[3] == 1);
    CHECK(t.ip_ancestor[6] == 0);
    const auto af = lambda_af_uniform(t, 3, 6, 4);
    const auto ip = lambda_ip_uniform(t, 3, 6, 4);
    CHECK(af.total == Rational(9));
    CHECK(ip.total == Rational(8));
    CHECK(af.edge_sum() == af.total);
    CHECK(ip.edge_sum() == ip.total);
}

TEST_CASE("Petersen layers") {
    const auto g = StorageGraph::petersen();
    for (int f = 0; f < 10; ++f) {
        std::vector<int> D;
        for (int v = 0; v < 10; ++v)
            if (v != f) D.push_back(v);
        CHECK(build_repair_tree(g, f, D, 3).layer_sizes() == std::vector<int>{3, 6});
    }
}

TEST_CASE("fig4 and fig5 totals") {
    const auto t4 = build_repair_tree(fig4, 0, range(1, 7), 5);
    CHECK(lambda_af_uniform(t4, 6, 6, 5).total == Rational(30));
    CHECK(lambda_ip_uniform(t4, 6, 6, 5).total == Rational(24));
    const auto t5 = build_repair_tree(fig5, 0, range(1, 10), 5);
    CHECK(t5.J == std::vector<int>{1});
    CHECK(lambda_af_uniform(t5, 25, 9, 5).total == Rational(95));
    const auto ip = lambda_ip_uniform(t5, 25, 9, 5);
    CHECK(ip.total == Rational(85));
    for (const auto& e : ip.edges) {
        if (e.from == 2) CHECK(e.symbols == Rational(15));
        if (e.from == 1) CHECK(e.symbols == Rational(25));
    }
    CHECK(lambda_ip_nonuniform(t5, 25, 9, 5, uniform_plan(t5, 25)).total == Rational(85));
}

TEST_CASE("unreachable helpers and bad inputs") {
    const auto g = from_edges(5, {{0, 1}, {1, 2}, {3, 4}});
    CHECK_THROWS_AS(build_repair_tree(g, 0, std::vector<int>{1, 3}, 1), GraphError);
    // Node 2 is reachable only through node 1, which is not a helper.
    CHECK_THROWS_AS(build_repair_tree(g, 0, std::vector<int>{2}, 1), GraphError);
    CHECK_THROWS_AS(build_repair_tree(g, 0, std::vector<int>{0, 1}, 1), ParameterError);
    CHECK_THROWS_AS(build_repair_tree(g, 0, std::vector<int>{1, 1}, 1), ParameterError);
}

TEST_CASE("IP never exceeds AF on random trees") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 12);
        StorageGraph g(n);
        for (int v = 1; v < n; ++v) g.add_edge(v, static_cast<int>(rng() % v));
        const int d = n - 1;
        const int k = 1 + static_cast<int>(rng() % d);
        const auto t = build_repair_tree(g, 0, range(1, n), k);
        const Rational l(d - k + 1);
        const auto af = lambda_af_uniform(t, l, d, k);
        const auto ip = lambda_ip_uniform(t, l, d, k);
        CHECK(ip.total <= af.total);
        CHECK(af.edge_sum() == af.total);
        const auto plan = uniform_plan(t, l);
        CHECK(plan.feasible());
        const auto nu = lambda_ip_nonuniform(t, l, d, k, plan);
        CHECK(nu.total == ip.total);
        CHECK(nu.edge_sum() == nu.total);
        CHECK(lambda_af_nonuniform(t, plan).total == af.total);
    }
}

TEST_CASE("layered nonuniform plan") {
    const auto t = build_repair_tree(layered, 0, range(1, 7), 3);
    CHECK(t.J == std::vector<int>{1});
    const auto plan = make_plan(t, 6, {2, 2, 1});
    CHECK(plan.feasible());
    CHECK(plan.t_prime == 2);
    CHECK(plan.eq16_residual == Rational(0));
    const auto nu = lambda_ip_nonuniform(t, 6, 6, 3, plan);
    CHECK(nu.total == Rational(16));
    CHECK(nu.edge_sum() == Rational(16));
    const auto u = lambda_ip_uniform(t, 6, 6, 3);
    CHECK(u.total == Rational(33, 2));
    CHECK(u.total - nu.total == ip_nonuniform_savings(t, plan));
    CHECK(ip_nonuniform_savings(t, plan) > 0);
    CHECK(lambda_af_nonuniform(t, plan).total == Rational(2 * 2 + 2 * 2 * 2 + 3 * 2 * 1));

    const auto bad = make_plan(t, 6, {1, 2, 2});
    CHECK_FALSE(bad.feasible());
    CHECK_THROWS_AS(lambda_ip_nonuniform(t, 6, 6, 3, bad), ParameterError);
    CHECK_FALSE(make_plan(t, 6, {2, 2, 2}).feasible());
}

TEST_CASE("deepest-layer deficit on the 3-regular tree ball") {
    const auto g = StorageGraph::tree_ball(3, 3);
    const auto D = graph::nearest_helpers(g, 0, 13);
    const auto t = build_repair_tree(g, 0, D, 4);
    CHECK(t.layer_sizes() == std::vector<int>{3, 6, 4});
    const Rational l(20);
    const auto plan = deepest_layer_plan(t, l, 1);
    CHECK(plan.layer_beta == std::vector<Rational>{Rational(8, 3), Rational(8, 3), Rational(1)});
    CHECK(plan.t_prime == 2);
    CHECK(plan.eq16_residual == Rational(0));
    CHECK(plan.feasible());
    const auto af = lambda_af_uniform(t, l, 13, 4).total;
    const auto nu = lambda_af_nonuniform(t, plan).total;
    CHECK(af == Rational(54));
    CHECK(nu == Rational(52));
    const std::vector<int> sizes{3, 6, 4};
    CHECK(af - nu == af_deepest_layer_savings(sizes, 4, 1));

    // Dropping the deepest layer entirely matches uniform AF at degree 9.
    const auto drop = deepest_layer_plan(t, l, Rational(2));
    CHECK(drop.layer_beta.back() == Rational(0));
    const auto t9 = build_repair_tree(g, 0, std::vector<int>(D.begin(), D.begin() + 9), 4);
    CHECK(lambda_af_nonuniform(t, drop).total == lambda_af_uniform(t9, l, 9, 4).total);
    CHECK(lambda_af_nonuniform(t, drop).total == Rational(50));
}

TEST_CASE("symbol-level simulation matches the formulas") {
    std::mt19937_64 rng(4);
    SUBCASE("PM on fig3") {
        const auto pm = codes::PmCode::with_default_points(7, 4);
        const auto nodes = pm.encode(test::random_vec(*pm.field(), pm.M(), rng));
        const auto ip = simulate_repair(fig3, pm.linear(), nodes, 0, range(1, 7), Scheme::ip_u);
        CHECK(ip.verified());
        CHECK(ip.measured.total == Rational(8));
        const auto af = simulate_repair(fig3, pm.linear(), nodes, 0, range(1, 7), Scheme::af_u);
        CHECK(af.verified());
        CHECK(af.measured.total == Rational(9));
        CHECK(simulate_repair(fig3, pm.linear(), nodes, 0, range(1, 7), Scheme::ip_nu).verified());
    }
    SUBCASE("GPM on fig4") {
        const auto gpm = codes::GpmCode::with_default_points(7, 5, 3);
        const auto nodes = gpm.encode(test::random_vec(*gpm.field(), gpm.M(), rng));
        const auto ip = simulate_repair(fig4, gpm.linear(), nodes, 0, range(1, 7), Scheme::ip_u);
        CHECK(ip.verified());
        CHECK(ip.measured.total == Rational(24));
        const auto af = simulate_repair(fig4, gpm.linear(), nodes, 0, range(1, 7), Scheme::af_u);
        CHECK(af.verified());
        CHECK(af.measured.total == Rational(30));
    }
    SUBCASE("stacked code on the layered tree") {
        const stacking::StackedCode code(stacking::build_stack(7, 3, 6, {1, 1, 2, 2, 2, 2}));
        const auto nodes = code.encode(test::random_vec(*code.field(), code.M(), rng));
        const auto ip = simulate_repair(layered, code, nodes, 0, range(1, 7), Scheme::ip_nu);
        CHECK(ip.verified());
        CHECK(ip.measured.total == Rational(16));
        const auto af = simulate_repair(layered, code, nodes, 0, range(1, 7), Scheme::af_nu);
        CHECK(af.verified());
        CHECK(af.measured.total == Rational(18));
        CHECK_THROWS_AS(simulate_repair(layered, code, nodes, 0, range(1, 7), Scheme::ip_u), ParameterError);
    }
    SUBCASE("stacked code on fig5") {
        const stacking::StackedCode code(stacking::build_stack(10, 5, 9, std::vector<std::int64_t>(9, 5)));
        const auto nodes = code.encode(test::random_vec(*code.field(), code.M(), rng));
        const auto ip = simulate_repair(fig5, code, nodes, 0, range(1, 10), Scheme::ip_u);
        CHECK(ip.verified());
        CHECK(ip.measured.total == Rational(85));
        const auto af = simulate_repair(fig5, code, nodes, 0, range(1, 10), Scheme::af_u);
        CHECK(af.verified());
        CHECK(af.measured.total == Rational(95));
    }
    SUBCASE("greedy IP compresses heavy non-J vertices") {
        const auto g = from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 5}, {0, 6}});
        const auto pm = codes::PmCode::with_default_points(7, 4);
        const auto nodes = pm.encode(test::random_vec(*pm.field(), pm.M(), rng));
        const auto plain = simulate_repair(g, pm.linear(), nodes, 0, range(1, 7), Scheme::ip_nu);
        const auto greedy = simulate_repair(g, pm.linear(), nodes, 0, range(1, 7), Scheme::ip_nu, true);
        CHECK(plain.verified());
        CHECK(greedy.verified());
        CHECK(greedy.measured.total <= plain.measured.total);
    }
}
