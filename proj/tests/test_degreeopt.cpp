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

#include "grc/degreeopt/degreeopt.hpp"
#include "grc/error.hpp"

using namespace grc;
using namespace grc::degreeopt;
using graph::StorageGraph;
using R = Rational;

namespace {

std::vector<R> ints(std::initializer_list<int> xs) {
    std::vector<R> out;
    for (int x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("structural LP optimum") {
    const LpInstance inst{5, 2, R(6), ints({1, 3, 1, 2})};
    const auto plan = solve_lp_structural(inst);
    CHECK(plan.d == 2);
    CHECK(plan.objective == R(12));
    CHECK(plan.objective_by_d == ints({12, 12, 14}));
    CHECK(plan.beta == ints({0, 0, 6, 6}));
    CHECK(lp_feasible(5, 2, R(6), plan.beta));
    CHECK(lp_bruteforce_oracle(inst, 12) == R(12));

    const auto flat = solve_lp_structural({7, 3, R(5), std::vector<R>(6, R(2))});
    CHECK(flat.d == 6);
    CHECK(flat.objective == R(2) * R(5) * R(6) / R(4));

    const auto top = solve_lp_structural({6, 5, R(4), ints({5, 4, 3, 2, 1})});
    CHECK(top.d == 5);
    CHECK(top.objective == R(4 * 15));

    CHECK(lp_bruteforce_oracle({5, 2, R(0), ints({1, 1, 1, 1})}, 4) == R(0));
    CHECK_THROWS_AS(lp_bruteforce_oracle({7, 2, R(1), std::vector<R>(6, R(1))}, 2), ParameterError);
    CHECK_THROWS_AS(solve_lp_structural({5, 5, R(1), ints({1, 1, 1, 1})}), ParameterError);
}

TEST_CASE("structural optimum equals the grid oracle on random instances") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 3);
        const int k = 1 + static_cast<int>(rng() % (n - 1));
        LpInstance inst{n, k, R(1 + static_cast<int>(rng() % 6)), {}};
        for (int i = 0; i < n - 1; ++i) inst.costs.emplace_back(static_cast<int>(rng() % 6));
        CAPTURE(trial);
        CHECK(lp_bruteforce_oracle(inst, 12) == solve_lp_structural(inst).objective);
    }
}

TEST_CASE("Petersen optimal degree") {
    const auto g = StorageGraph::petersen();
    CHECK(threshold_regular(3, 2) == R(5, 2));
    CHECK(threshold_k(3, 2) == 3);
    for (int k = 3; k <= 5; ++k)
        for (int f = 0; f < 10; ++f) {
            const auto r = optimal_degree_af(g, f, k, R(1));
            CHECK(r.d == 9);
            for (std::size_t i = 1; i < r.lambda_by_d.size(); ++i) CHECK(r.lambda_by_d[i] <= r.lambda_by_d[i - 1]);
        }
    CHECK(threshold_general(g, 0) == R(5, 2));
    CHECK(threshold_k_general(g, 0) == 3);
}

TEST_CASE("regular-graph threshold formula") {
    CHECK(threshold_regular(4, 1) == R(1));
    CHECK(threshold_k(4, 1) == 2);
    CHECK(threshold_regular(6, 7) == R(1) + R(29286, 7));
    CHECK(threshold_k(6, 7) <= 5000);
    CHECK(threshold_k(6, 6) == 977);
}

TEST_CASE("complete graphs use every other node") {
    for (int n = 3; n <= 9; ++n)
        for (int k = 2; k < n; ++k) CHECK(optimal_degree_af(StorageGraph::complete(n), 0, k, R(1)).d == n - 1);
    // k = 1 makes every degree cost l; the smallest one wins the tie.
    CHECK(optimal_degree_af(StorageGraph::complete(6), 0, 1, R(1)).d == 1);
    StorageGraph split(4);
    split.add_edge(0, 1);
    split.add_edge(2, 3);
    CHECK_THROWS_AS(optimal_degree_af(split, 0, 1, R(1)), GraphError);
}

TEST_CASE("nearest layer beats bare k and thresholds hold on a corpus") {
    std::vector<StorageGraph> corpus{StorageGraph::petersen(), StorageGraph::cycle(8), StorageGraph::tree_ball(3, 2),
                                     StorageGraph::path(6), StorageGraph::star(7)};
    std::mt19937_64 rng(5);
    while (corpus.size() < 12) {
        auto g = StorageGraph::erdos_renyi(10, 0.35, rng());
        if (g.connected()) corpus.push_back(g);
    }
    for (const auto& g : corpus) {
        const int n = g.n();
        for (int f = 0; f < n; ++f) {
            const auto dist = graph::distances(g, f);
            const auto order = graph::bfs_order(g, f);
            for (int k = 1; k <= n - 1; ++k) {
                const int a = dist[order[k]];
                int ball = 0;
                for (int v = 0; v < n; ++v)
                    if (dist[v] >= 1 && dist[v] <= a) ++ball;
                CHECK(lambda_af_at_degree(g, f, k, R(1), k) >= lambda_af_at_degree(g, f, k, R(1), ball));
            }
            for (int k = threshold_k_general(g, f); k <= n - 1; ++k) CHECK(optimal_degree_af(g, f, k, R(1)).d == n - 1);
        }
    }
}

TEST_CASE("tree search") {
    const auto k5 = optimal_tree_search(StorageGraph::complete(5), 0, 2, R(3), SearchMode::exhaustive);
    CHECK(k5.d == 4);
    CHECK(k5.lambda == R(4));
    for (int h : k5.helpers) CHECK(k5.parent[h] == 0);

    StorageGraph fig3(7);
    for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {1, 5}, {0, 6}}) fig3.add_edge(u, v);
    const auto ex = optimal_tree_search(fig3, 0, 4, R(3), SearchMode::exhaustive);
    const auto he = optimal_tree_search(fig3, 0, 4, R(3), SearchMode::heuristic);
    CHECK(ex.lambda == R(8));
    CHECK(ex.d == 6);
    CHECK(he.lambda == R(8));

    const auto p4 = StorageGraph::path(4);
    CHECK(optimal_tree_search(p4, 0, 2, R(2), SearchMode::exhaustive).lambda ==
          optimal_tree_search(p4, 0, 2, R(2), SearchMode::heuristic).lambda);

    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 4);
        const auto g = StorageGraph::erdos_renyi(n, 0.5, rng());
        if (!g.connected()) continue;
        const int k = 1 + static_cast<int>(rng() % (n - 1));
        const auto a = optimal_tree_search(g, 0, k, R(6), SearchMode::exhaustive);
        const auto b = optimal_tree_search(g, 0, k, R(6), SearchMode::heuristic);
        CHECK(a.lambda <= b.lambda);
    }
    CHECK_THROWS_AS(optimal_tree_search(StorageGraph::path(10), 0, 2, R(1), SearchMode::exhaustive), ParameterError);
}

TEST_CASE("random-graph experiment is deterministic") {
    const auto a = mc_random_graph_experiment({12, 16}, 3.0, 0.5, 20, 99);
    const auto b = mc_random_graph_experiment({12, 16}, 3.0, 0.5, 20, 99);
    REQUIRE(a.size() == 2);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].hits == b[i].hits);
        CHECK(a[i].resampled == b[i].resampled);
        CHECK(a[i].trials == 20);
        CHECK(a[i].k == a[i].n / 2);
    }
    const auto full = mc_random_graph_experiment({8}, 100.0, 0.5, 10, 1);
    CHECK(full[0].p == 1.0);
    CHECK(full[0].frequency() == 1.0);
}
