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
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "grc/codes/linear_code.hpp"
#include "grc/graph/graph.hpp"
#include "grc/rational.hpp"
#include "grc/stacking/stacking.hpp"

namespace grc::graphrepair {

using codes::NodeContents;
using codes::Vec;
using graph::StorageGraph;

enum class Scheme { af_u, ip_u, af_nu, ip_nu };

const char* to_string(Scheme s);
/// Accepts "af-u", "ip-u", "af-nu", "ip-nu".
Scheme parse_scheme(const std::string& s);
bool is_ip(Scheme s);
bool is_nonuniform(Scheme s);

/// BFS tree on the subgraph induced by {f} and D, oriented toward f.
struct RepairTree {
    int root = -1;
    int k = 0;
    std::vector<int> helpers;  ///< BFS order, nearest first
    std::vector<int> parent;   ///< -1 for the root and vertices outside the tree
    std::vector<int> depth;    ///< rho(v, f); -1 outside the tree
    std::vector<std::vector<int>> children;
    std::vector<std::vector<int>> layers;  ///< layers[i] holds the vertices at depth i+1
    std::vector<int> sigma;                ///< number of descendants
    std::vector<int> J;                    ///< vertices with sigma >= d-k+1, ascending
    std::vector<int> ip_ancestor;          ///< P(v): nearest proper ancestor in J, else the root

    int d() const { return static_cast<int>(helpers.size()); }
    int height() const { return static_cast<int>(layers.size()); }
    int ip_threshold() const { return d() - k + 1; }
    std::vector<int> layer_sizes() const;
    bool in_tree(int v) const;
    bool in_j(int v) const;
    /// Helpers ordered deepest first, ties by ascending index.
    std::vector<int> bottom_up() const;

    nlohmann::json to_json() const;
};

/// Throws GraphError when a helper cannot be reached from f inside the
/// induced subgraph, ParameterError on a bad helper set.
RepairTree build_repair_tree(const StorageGraph& g, int f, std::span<const int> D, int k);

struct EdgeLoad {
    int from = -1;
    int to = -1;
    Rational symbols{0};
};

struct BandwidthReport {
    Scheme scheme = Scheme::af_u;
    std::vector<EdgeLoad> edges;  ///< one per helper, ascending by `from`
    Rational total{0};
    std::vector<std::pair<int, Rational>> downloads;  ///< per helper, ascending

    Rational edge_sum() const;
    nlohmann::json to_json() const;
};

/// Per-layer downloads for the nonuniform schemes.
struct NonuniformPlan {
    Rational l{0};
    Rational beta{0};                ///< l / (d-k+1)
    std::vector<Rational> layer_beta;  ///< beta_i, i = 1..t
    std::vector<Rational> delta;       ///< beta - beta_i
    int t_prime = 0;                   ///< 0 when no layer suffix reaches d-k+1 helpers
    Rational eq16_residual{0};
    Rational smallest_sum{0};  ///< Delta_{d-k+1} of the per-helper downloads

    bool monotone() const;
    bool feasible() const;
    nlohmann::json to_json() const;
};

NonuniformPlan make_plan(const RepairTree& tree, Rational l, std::vector<Rational> layer_beta);
NonuniformPlan uniform_plan(const RepairTree& tree, Rational l);
/// The deepest layer downloads beta - delta; shallower layers share the
/// deficit equally so that the smallest d-k+1 downloads still sum to l.
NonuniformPlan deepest_layer_plan(const RepairTree& tree, Rational l, Rational delta);

BandwidthReport lambda_af_uniform(const RepairTree& tree, Rational l, int d, int k);
BandwidthReport lambda_ip_uniform(const RepairTree& tree, Rational l, int d, int k);
/// Throws ParameterError on an infeasible plan. With greedy_ip, helpers
/// outside J whose accumulated load exceeds l also compress.
BandwidthReport lambda_ip_nonuniform(const RepairTree& tree, Rational l, int d, int k, const NonuniformPlan& plan,
                                     bool greedy_ip = false);
BandwidthReport lambda_af_nonuniform(const RepairTree& tree, const NonuniformPlan& plan);

/// sum over helpers outside J of rho(j, P(j)) delta_{layer(j)}.
Rational ip_nonuniform_savings(const RepairTree& tree, const NonuniformPlan& plan);
/// Closed-form AF saving of deepest_layer_plan on a layered tree with the
/// given layer sizes: d_a delta/(d-k+1-d_a) * (sum_{i<a}(a-i) d_i - a(k-1)).
Rational af_deepest_layer_savings(std::span<const int> layer_sizes, int k, Rational delta);

struct SimulationResult {
    Vec content;
    bool restored = false;
    BandwidthReport measured;
    BandwidthReport formula;
    bool counts_match = false;
    bool verified() const { return restored && counts_match; }
};

/// Moves actual symbols up the tree: each helper applies its projection,
/// IP vertices fold what they hold into an l-vector, and the root combines.
/// Counts every symbol crossing every edge.
BandwidthReport run_repair(const RepairTree& tree, const codes::IpMatrixSet& plan, const NodeContents& nodes,
                           Scheme scheme, std::int64_t l, bool greedy_ip, Vec& restored);

/// Uniform-download code (PM, GPM, unit codes). The nonuniform schemes use
/// the uniform plan.
SimulationResult simulate_repair(const StorageGraph& g, const codes::LinearCode& code, const NodeContents& nodes, int f,
                                 std::span<const int> D, Scheme scheme, bool greedy_ip = false);
/// Stacked code; helpers in BFS order take slots d, d-1, ..., 1, so the
/// download profile must be constant on every layer.
SimulationResult simulate_repair(const StorageGraph& g, const stacking::StackedCode& code, const NodeContents& nodes,
                                 int f, std::span<const int> D, Scheme scheme, bool greedy_ip = false);

}  // namespace grc::graphrepair
