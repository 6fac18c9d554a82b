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
#include <vector>

#include <json.hpp>

#include "grc/graph/graph.hpp"
#include "grc/rational.hpp"

namespace grc::degreeopt {

using graph::StorageGraph;

/// min sum b_i beta_i subject to sum_{i in A} beta_i >= l for every A of
/// size n-k among the n-1 candidate helpers.
struct LpInstance {
    int n = 0;
    int k = 0;
    Rational l{0};
    std::vector<Rational> costs;  ///< n-1 entries; sorted nonincreasing by the solvers

    void validate() const;
};

struct DegreePlan {
    int d = 0;
    std::vector<Rational> costs;  ///< sorted nonincreasing
    std::vector<Rational> beta;   ///< aligned with costs
    Rational objective{0};
    std::vector<Rational> objective_by_d;  ///< index d-k
};

/// True when the n-k smallest entries of beta sum to at least l.
bool lp_feasible(int n, int k, const Rational& l, const std::vector<Rational>& beta);

/// Evaluates beta_i = 0 on the n-d-1 most expensive helpers and
/// l/(d-k+1) on the rest for every d = k..n-1; ties go to the smallest d.
DegreePlan solve_lp_structural(LpInstance inst);

/// Exhaustive minimum over beta_i in {0, l/Q, ..., l} checking every subset
/// constraint. Throws ParameterError when n > 6.
Rational lp_bruteforce_oracle(LpInstance inst, int grid_denominator);

/// Lambda_U^AF(d) with the d helpers nearest to f (BFS order).
Rational lambda_af_at_degree(const StorageGraph& g, int f, int k, const Rational& l, int d);

struct AfDegreeResult {
    int d = 0;
    Rational lambda{0};
    std::vector<int> helpers;
    std::vector<Rational> lambda_by_d;  ///< index d-k
};

/// argmin over d = k..n-1 of Lambda_U^AF(d); ties go to the smallest d.
/// Throws GraphError on a disconnected graph.
AfDegreeResult optimal_degree_af(const StorageGraph& g, int f, int k, const Rational& l);

/// 1 + max_{1<=a<=m} sum_{i=1}^{a-1} t(t-1)^{i-1}(1 - i/a).
Rational threshold_regular(int t, int m);
/// Smallest integer k strictly above threshold_regular(t, m).
int threshold_k(int t, int m);
/// max_{1<=a<=m_f} (C(a) - K(a)/a) from the BFS layers around f.
Rational threshold_general(const StorageGraph& g, int f);
int threshold_k_general(const StorageGraph& g, int f);

enum class SearchMode { exhaustive, heuristic };

struct TreeSearchResult {
    std::vector<int> helpers;  ///< ascending
    std::vector<int> parent;   ///< per vertex, -1 outside the tree and at f
    int d = 0;
    Rational lambda{0};
    bool exhaustive = false;
    std::uint64_t trees_examined = 0;

    nlohmann::json to_json() const;
};

/// Minimizes Lambda_U^IP over helper sets and trees on {f} and D built
/// from graph edges. Exhaustive mode needs n <= 9 and a bounded number of
/// parent assignments; heuristic mode takes BFS trees on the d nearest
/// helpers for every d.
TreeSearchResult optimal_tree_search(const StorageGraph& g, int f, int k, const Rational& l, SearchMode mode);

struct McRow {
    int n = 0;
    double p = 0.0;
    int k = 0;
    int trials = 0;
    int hits = 0;       ///< trials with d*_AF = n-1
    int resampled = 0;  ///< disconnected samples discarded
    double frequency() const { return trials == 0 ? 0.0 : static_cast<double>(hits) / trials; }
};

/// `trials` connected samples of G(n, p) (disconnected ones are redrawn),
/// counting those whose failed node 0 has d*_AF = n-1 at l = 1.
McRow mc_trials(int n, double p, int k, int trials, std::uint64_t seed);

/// For each n: p = p_factor * ln(n) / n (capped at 1), k = floor(k_fraction
/// * n), failed node 0. Trial seeds come from splitmix64 over (seed, n,
/// trial index).
std::vector<McRow> mc_random_graph_experiment(const std::vector<int>& ns, double p_factor, double k_fraction,
                                              int trials, std::uint64_t seed);

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace grc::degreeopt
